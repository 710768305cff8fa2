// Command-line front end: characters, Hall-Littlewood data, GT patterns,
// Yangian spectra, and the verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quiverchar/characters.hpp"
#include "quiverchar/diagrams.hpp"
#include "quiverchar/render.hpp"
#include "quiverchar/symfunc.hpp"
#include "quiverchar/verify.hpp"
#include "quiverchar/yangian.hpp"

using namespace quiverchar;

namespace {

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size())
      throw CLI::ValidationError(std::string(what) + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

// "c*s[lam]" with the conventional shorthand for coefficient 1 and monomials
std::string schur_term(const Partition& lam, const QPoly& c) {
  std::string base = "s" + expo_key(std::vector<int>(lam.begin(), lam.end()));
  std::string cs = c.str();
  if (cs == "1") return base;
  if (cs.find(' ') != std::string::npos) return "(" + cs + ")*" + base;
  return cs + "*" + base;
}

std::string schur_expansion_text(const std::map<Partition, QPoly>& terms) {
  std::string s;
  for (const auto& [lam, c] : terms) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += schur_term(lam, c);
  }
  return s.empty() ? "0" : s;
}

json schur_expansion_json(const std::map<Partition, QPoly>& terms) {
  json out = json::object();
  for (const auto& [lam, c] : terms)
    if (!c.is_zero())
      out[expo_key(std::vector<int>(lam.begin(), lam.end()))] = c.str();
  return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// H_mu as a sum of Kostka-Foulkes polynomials against Schur functions;
// an independent route from the vertex-operator construction in `jing`
std::map<Partition, QPoly> transformed_hl_via_kostka(const Partition& mu,
                                                     int n) {
  int m = weight(mu);
  std::map<Partition, QPoly> out;
  for (const auto& lam : partitions_of(m, n)) {
    auto row = kostka_foulkes_row(lam);
    auto it = row.find(mu);
    if (it != row.end() && !it->second.is_zero()) out[lam] = it->second;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characters and integrable structure of the unitary "
               "quiver matrix model"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int N = 1, n = 1, k = 1, qmax = 6, r = 0, d = 4, D = 6;
  std::string mu_s, lam_s, tail_s;
  bool transformed = false;

  auto* c_char = app.add_subcommand("character", "graded character of the model");
  c_char->add_option("--N", N, "number of particles")->required();
  c_char->add_option("--n", n, "number of colors")->required();
  c_char->add_option("--k", k, "level")->required();
  c_char->add_option("--qmax", qmax, "truncation degree in q");

  auto* c_ground = app.add_subcommand("ground", "ground-state multiplet and energy");
  c_ground->add_option("--N", N, "number of particles")->required();
  c_ground->add_option("--n", n, "number of colors")->required();
  c_ground->add_option("--k", k, "level")->required();

  auto* c_hl = app.add_subcommand("hl", "Hall-Littlewood polynomial P_mu "
                                        "(or H_mu with --transformed)");
  c_hl->add_option("--mu", mu_s, "partition, comma separated")->required();
  c_hl->add_option("--n", n, "number of variables")->required();
  c_hl->add_flag("--transformed", transformed,
                 "print H_mu in the Schur basis (via Kostka-Foulkes)");

  auto* c_jing = app.add_subcommand("jing", "H_mu via Jing vertex operators, "
                                            "Schur expanded");
  c_jing->add_option("--mu", mu_s, "partition, comma separated")->required();
  c_jing->add_option("--n", n, "number of variables")->required();

  auto* c_kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
  c_kostka->add_option("--lam", lam_s, "partition, comma separated")->required();
  c_kostka->add_option("--mu", mu_s, "partition, comma separated")->required();

  auto* c_gt = app.add_subcommand("gt", "k-interlacing GT patterns with a "
                                        "given top row");
  c_gt->add_option("--N", N, "number of particles")->required();
  c_gt->add_option("--n", n, "number of colors")->required();
  c_gt->add_option("--k", k, "level")->required();
  c_gt->add_option("--lam", lam_s, "top row, comma separated")->required();

  auto* c_semigt = app.add_subcommand("semigt", "semi-infinite GT patterns up "
                                                "to a given degree");
  c_semigt->add_option("--r", r, "charge")->required();
  c_semigt->add_option("--n", n, "number of colors")->required();
  c_semigt->add_option("--k", k, "level")->required();
  c_semigt->add_option("--d", d, "maximal degree");

  auto* c_spec = app.add_subcommand("spectra", "Yangian minor eigenvalues on "
                                               "the GT basis");
  c_spec->add_option("--N", N, "number of particles")->required();
  c_spec->add_option("--n", n, "number of colors")->required();
  c_spec->add_option("--k", k, "level")->required();
  c_spec->add_option("--lam", lam_s, "top row, comma separated")->required();

  auto* c_drin = app.add_subcommand("drinfeld", "Drinfeld polynomials of a "
                                                "semi-infinite top row");
  c_drin->add_option("--lam", lam_s, "prefix entries, comma separated");
  c_drin->add_option("--tail", tail_s, "tail parameters n,k,r")->required();

  auto* c_cs = app.add_subcommand("cs-spectrum", "Calogero-Sutherland spectrum "
                                                 "with multiplicities");
  c_cs->add_option("--N", N, "number of particles")->required();
  c_cs->add_option("--n", n, "number of colors")->required();
  c_cs->add_option("--k", k, "level")->required();
  c_cs->add_option("--D", D, "maximal degree");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  c_verify->add_option("suite", suite, "one of: hl, characters, gt, yangian, "
                                       "fock, kz, cs")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  VerifyCaps caps;
  c_verify->add_option("--N", caps.N, "cap the particle-number grid");
  c_verify->add_option("--n", caps.n, "cap the color grid");
  c_verify->add_option("--k", caps.k, "cap the level grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*c_char) {
      ModelParams p(N, n, k);
      SymSeries ch = hilbert_character(p, qmax);
      if (format == "json") {
        emit(character_json(p, qmax, ch));
      } else {
        for (int e = 0; e <= qmax; ++e)
          std::cout << "q^" << e << ": "
                    << sympoly_terms_text(ch.coeffs[static_cast<size_t>(e)])
                    << "\n";
      }
    } else if (*c_ground) {
      ModelParams p(N, n, k);
      auto [g, e0] = ground_state_character(p);
      if (format == "json") {
        json out;
        out["E0"] = e0;
        out["terms"] = sympoly_terms_json(g);
        emit(out);
      } else {
        std::cout << "E0 = " << e0 << "\n" << sympoly_terms_text(g) << "\n";
      }
    } else if (*c_hl) {
      auto mu_v = parse_ints(mu_s, "--mu");
      Partition mu = normalize_partition(Partition(mu_v.begin(), mu_v.end()));
      if (transformed) {
        auto terms = transformed_hl_via_kostka(mu, n);
        if (format == "json")
          emit(schur_expansion_json(terms));
        else
          std::cout << schur_expansion_text(terms) << "\n";
      } else {
        SymPoly p = hall_littlewood_P(mu, n);
        if (format == "json") {
          json out = json::object();
          MPoly m = p.expand();
          for (const auto& [e, c] : m.terms()) out[expo_key(e)] = c.str();
          emit(out);
        } else {
          std::cout << sympoly_terms_text(p) << "\n";
        }
      }
    } else if (*c_jing) {
      auto mu_v = parse_ints(mu_s, "--mu");
      Partition mu = normalize_partition(Partition(mu_v.begin(), mu_v.end()));
      auto terms = schur_expand(transformed_hl(mu, n));
      if (format == "json")
        emit(schur_expansion_json(terms));
      else
        std::cout << schur_expansion_text(terms) << "\n";
    } else if (*c_kostka) {
      auto lam_v = parse_ints(lam_s, "--lam");
      auto mu_v = parse_ints(mu_s, "--mu");
      QPoly kq = kostka_foulkes(
          normalize_partition(Partition(lam_v.begin(), lam_v.end())),
          normalize_partition(Partition(mu_v.begin(), mu_v.end())));
      if (format == "json")
        emit(json{{"kostka", kq.str()}});
      else
        std::cout << kq.str() << "\n";
    } else if (*c_gt || *c_spec) {
      auto pats = enumerate_gt(N, n, k, WeightRow(parse_ints(lam_s, "--lam")));
      if (*c_gt) {
        if (format == "json") {
          json out = json::array();
          for (const auto& p : pats) out.push_back(pattern_json(p));
          emit(out);
        } else {
          for (const auto& p : pats) std::cout << pattern_text(p) << "\n";
        }
      } else {
        json out = json::array();
        for (const auto& p : pats) {
          std::vector<std::string> eigs;
          for (int m = 1; m <= n; ++m)
            eigs.push_back(minor_eigenvalue(p, m).str());
          if (format == "json") {
            json row = pattern_json(p);
            row["minors"] = eigs;
            out.push_back(row);
          } else {
            std::cout << pattern_text(p) << " :";
            for (const auto& e : eigs) std::cout << " " << e << ";";
            std::cout << "\n";
          }
        }
        if (format == "json") emit(out);
      }
    } else if (*c_semigt) {
      auto pats = enumerate_semiinf(r, n, k, d);
      if (format == "json") {
        json out = json::array();
        for (const auto& p : pats) out.push_back(pattern_json(p));
        emit(out);
      } else {
        for (const auto& p : pats) std::cout << pattern_text(p) << "\n";
      }
    } else if (*c_drin) {
      auto tv = parse_ints(tail_s, "--tail");
      if (tv.size() != 3)
        throw std::invalid_argument("--tail expects n,k,r");
      Tail t{tv[0], tv[1], tv[2]};
      std::vector<int> prefix =
          lam_s.empty() ? std::vector<int>{} : parse_ints(lam_s, "--lam");
      WeightRow lam(prefix, t);
      auto pols = drinfeld_polynomials(lam, t.r, t.n, t.k);
      if (format == "json") {
        json out = json::array();
        for (const auto& p : pols) out.push_back(p.str());
        emit(out);
      } else {
        for (size_t m = 0; m < pols.size(); ++m)
          std::cout << "P_" << (m + 1) << "(u) = " << pols[m].str() << "\n";
      }
    } else if (*c_cs) {
      ModelParams p(N, n, k);
      json rows = json::array();
      for (const auto& lam : admissible_weights(p, D)) {
        WeightRow row(lam);
        long deg = degree_plain(row, k);
        long e = 0;
        for (int i = 1; i <= N; ++i) {
          long t = lam[static_cast<size_t>(i - 1)] - k;
          e += t * (t + N + 1 - 2 * i);
        }
        size_t mult = enumerate_gt(N, n, k, row).size();
        if (format == "json") {
          rows.push_back({{"degree", deg},
                          {"lambda", lam},
                          {"eigenvalue", e},
                          {"multiplicity", mult}});
        } else {
          std::cout << "deg=" << deg << " lambda=" << expo_key(lam)
                    << " E=" << e << " mult=" << mult << "\n";
        }
      }
      if (format == "json") emit(rows);
    } else if (*c_verify) {
      bool all = true;
      json rows = json::array();
      for (const auto& res : run_suite(suite, caps)) {
        all = all && res.pass;
        if (format == "json") {
          rows.push_back({{"check", res.name},
                          {"pass", res.pass},
                          {"detail", res.detail}});
        } else {
          std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name;
          if (!res.pass) std::cout << "  [" << res.detail << "]";
          std::cout << "\n";
        }
      }
      if (format == "json") emit(rows);
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
