// Command-line front end: counting, classification, bijection certificates,
// series builders, run networks, set partitions, and b-file comparison.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcp/bijections.hpp"
#include "qcp/enumerate.hpp"
#include "qcp/run_network.hpp"
#include "qcp/series.hpp"
#include "qcp/set_partition.hpp"

using json = nlohmann::ordered_json;
using namespace qcp;

namespace {

json series_to_json(const BivariateSeries& s) {
  json out;
  out["normalization"] = s.normalization() == Normalization::EGF ? "egf" : "ogf";
  out["order"] = s.order();
  json coeffs = json::array();
  for (int n = 0; n <= s.order(); ++n)
    coeffs.push_back(s.int_coeff(n).coeff_strings());
  out["coeffs"] = std::move(coeffs);
  return out;
}

json certificate_to_json(const BijectionCertificate& c) {
  json out;
  out["pair"] = c.pair;
  out["n"] = c.n;
  out["bijective"] = c.bijective;
  out["des_preserved"] = c.des_preserved;
  if (c.inv_preserved)
    out["inv_preserved"] = *c.inv_preserved;
  else
    out["inv_preserved"] = nullptr;
  if (c.counterexample)
    out["counterexample"] = format_perm(*c.counterexample);
  else
    out["counterexample"] = nullptr;
  if (!c.mapped.empty()) {
    json rows = json::array();
    for (const auto& [p, q] : c.mapped)
      rows.push_back({format_perm(p), format_perm(q)});
    out["mapped"] = std::move(rows);
  }
  return out;
}

IntPoly weight_from_json(const json& w) {
  if (w.is_string()) {
    std::string s = w.get<std::string>();
    if (s == "t") return IntPoly::t_power(1);
    if (s == "1") return IntPoly::constant(1);
    throw std::runtime_error("runnet spec: unsupported weight string " + s);
  }
  std::vector<mpz_class> c;
  for (const auto& v : w) c.emplace_back(v.get<long>());
  return IntPoly(std::move(c));
}

RunNetwork network_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file " + path);
  json spec = json::parse(in);
  RunNetwork net;
  net.m = spec.at("m").get<int>();
  for (const auto& a : spec.at("arcs")) {
    RunNetworkArc arc;
    arc.from = a.at("from").get<int>();
    arc.to = a.at("to").get<int>();
    for (const auto& len : a.at("lengths")) arc.lengths.push_back(len.get<int>());
    arc.weight = weight_from_json(a.at("weight"));
    net.arcs.push_back(std::move(arc));
  }
  return net;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pattern-avoidance toolkit"};
  app.require_subcommand(1);

  int jobs = 0;
  int cap = kDefaultEnumerationCap;
  std::string format = "pretty";
  app.add_option("--jobs", jobs, "worker threads for enumeration (0 = default)");
  app.add_option("--cap", cap, "enumeration size guard");
  app.add_option("--format", format, "output format: json | csv | pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::string pattern_text, pair_text, series_name, spec_path, bfile_path, map_name = "I";
  int n_arg = 0, order_arg = 8, verify_brute = -1, length_arg = 4;
  bool quasi = false, check_inv = false;

  auto* cmd_count = app.add_subcommand("count", "avoider counts 0..n");
  cmd_count->add_option("--pattern", pattern_text)->required();
  cmd_count->add_option("--n", n_arg)->required();

  auto* cmd_vector = app.add_subcommand("vector", "descent vectors 1..n");
  cmd_vector->add_option("--pattern", pattern_text)->required();
  cmd_vector->add_option("--n", n_arg)->required();

  auto* cmd_classify = app.add_subcommand("classify", "group patterns by descent vectors");
  cmd_classify->add_option("--length", length_arg);
  cmd_classify->add_flag("--quasi", quasi);
  cmd_classify->add_option("--n", n_arg)->required();

  auto* cmd_bijection = app.add_subcommand("bijection", "certify a pattern pair");
  cmd_bijection->add_option("--pair", pair_text, "alpha:beta")->required();
  cmd_bijection->add_option("--n", n_arg)->required();
  cmd_bijection->add_flag("--check-inv", check_inv);

  auto* cmd_series = app.add_subcommand("series", "closed-form series builders");
  cmd_series->add_option("--name", series_name)->required();
  cmd_series->add_option("--order", order_arg);
  cmd_series->add_option("--verify-brute", verify_brute);

  auto* cmd_runnet = app.add_subcommand("runnet", "run-network enumerator");
  cmd_runnet->add_option("--spec", spec_path)->required();
  cmd_runnet->add_option("--order", order_arg);

  auto* cmd_partitions = app.add_subcommand("partitions", "set-partition bijections");
  cmd_partitions->add_option("--n", n_arg)->required();
  cmd_partitions->add_option("--map", map_name)->check(CLI::IsMember({"I", "II"}));

  auto* cmd_oeis = app.add_subcommand("oeis", "compare counts against a b-file");
  cmd_oeis->add_option("--pattern", pattern_text)->required();
  cmd_oeis->add_option("--bfile", bfile_path)->required();
  cmd_oeis->add_option("--n", n_arg)->required();

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (cmd_count->parsed()) {
      VincularPattern w = parse_pattern(pattern_text);
      json counts = json::array();
      for (int n = 0; n <= n_arg; ++n) counts.push_back(avoider_count(n, w, cap));
      if (format == "json") {
        std::cout << json{{"pattern", pattern_text}, {"counts", counts}}.dump(2)
                  << "\n";
      } else {
        for (int n = 0; n <= n_arg; ++n) {
          if (n) std::cout << (format == "csv" ? "," : " ");
          std::cout << counts[n].get<long long>();
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (cmd_vector->parsed()) {
      VincularPattern w = parse_pattern(pattern_text);
      json rows = json::array();
      for (int n = 1; n <= n_arg; ++n) {
        DescentVector dv = descent_vector(n, w, cap);
        if (format == "json") {
          rows.push_back({{"n", n}, {"counts", dv.counts}});
        } else {
          std::cout << descent_vector_csv_row(render_pattern(w), dv) << "\n";
        }
      }
      if (format == "json")
        std::cout << json{{"pattern", render_pattern(w)}, {"vectors", rows}}.dump(2)
                  << "\n";
      return 0;
    }

    if (cmd_classify->parsed()) {
      std::vector<VincularPattern> patterns;
      if (quasi) {
        patterns = quasi_consecutive_patterns(length_arg);
      } else {
        throw std::invalid_argument("classify: only --quasi pattern families are supported");
      }
      ClassReport rep = classify(patterns, n_arg, cap);
      if (format == "json") {
        json classes = json::array();
        for (const auto& c : rep.classes) {
          json vectors = json::array();
          for (const auto& dv : c.vectors) vectors.push_back(dv.counts);
          classes.push_back({{"members", c.members}, {"vectors", vectors}});
        }
        std::cout << json{{"n_max", rep.n_max}, {"classes", classes}}.dump(2)
                  << "\n";
      } else if (format == "csv") {
        for (const auto& c : rep.classes)
          for (size_t i = 0; i < c.members.size(); ++i)
            std::cout << descent_vector_csv_row(c.members[i], c.vectors.back())
                      << "\n";
      } else {
        for (size_t i = 0; i < rep.classes.size(); ++i) {
          std::cout << "class " << i + 1 << ":";
          for (const auto& m : rep.classes[i].members) std::cout << " " << m;
          std::cout << " |";
          for (long long v : rep.classes[i].vectors.back().counts)
            std::cout << " " << v;
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (cmd_bijection->parsed()) {
      size_t colon = pair_text.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--pair expects alpha:beta");
      VincularPattern alpha = parse_pattern(pair_text.substr(0, colon));
      VincularPattern beta = parse_pattern(pair_text.substr(colon + 1));
      BijectionCertificate cert =
          certify_pair(alpha, beta, n_arg, check_inv, true, cap);
      std::cout << certificate_to_json(cert).dump(2) << "\n";
      return cert.bijective && cert.des_preserved &&
                     (!check_inv || (cert.inv_preserved && *cert.inv_preserved))
                 ? 0
                 : 1;
    }

    if (cmd_series->parsed()) {
      BivariateSeries s = series_name == "narayana"
                              ? narayana(order_arg)
                              : closed_form(series_name, order_arg);
      json out = series_to_json(s);
      bool ok = true;
      if (verify_brute >= 0) {
        VincularPattern w =
            series_name == "(123)cons"   ? make_consecutive({1, 2, 3})
            : series_name == "(321)cons" ? make_consecutive({3, 2, 1})
            : series_name == "narayana"  ? parse_pattern("(13)2")
                                         : parse_pattern(series_name);
        json checks = json::array();
        int upto = std::min(verify_brute, s.order());
        for (int n = series_name == "narayana" ? 1 : 0; n <= upto; ++n) {
          bool match = s.int_coeff(n) == descent_polynomial(n, w, cap);
          if (!match) ok = false;
          checks.push_back({{"n", n}, {"match", match}});
        }
        out["brute_force_checks"] = std::move(checks);
        out["all_match"] = ok;
      }
      std::cout << out.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (cmd_runnet->parsed()) {
      RunEnumerator en = run_network_enumerator(network_from_file(spec_path), order_arg);
      json entries = json::array();
      for (int i = 0; i < en.m; ++i)
        for (int j = 0; j < en.m; ++j)
          entries.push_back({{"from", i + 1},
                             {"to", j + 1},
                             {"series", series_to_json(en.entry(en.result, i, j))}});
      std::cout << json{{"m", en.m}, {"entries", entries}}.dump(2) << "\n";
      return 0;
    }

    if (cmd_partitions->parsed()) {
      bool use_I = map_name == "I";
      VincularPattern target = parse_pattern(use_I ? "(32)1" : "(21)3");
      json rows = json::array();
      bool ok = true;
      for_each_partition(n_arg, [&](const SetPartition& p) {
        Perm img = use_I ? phi_I(p) : phi_II(p);
        int want = use_I ? p.blk() - p.sing() : p.blk() - 1;
        bool good = avoids(img, target) && des(img) == want;
        if (!good) ok = false;
        rows.push_back({{"partition", format_partition(p)},
                        {"image", format_perm(img)},
                        {"des", des(img)},
                        {"expected", want},
                        {"ok", good}});
      });
      if (format == "json") {
        std::cout << json{{"n", n_arg},
                          {"map", map_name},
                          {"rows", rows},
                          {"all_ok", ok}}
                         .dump(2)
                  << "\n";
      } else {
        for (const auto& r : rows)
          std::cout << r["partition"].get<std::string>() << " -> "
                    << r["image"].get<std::string>() << " des="
                    << r["des"].get<int>() << (r["ok"].get<bool>() ? "" : " MISMATCH")
                    << "\n";
      }
      return ok ? 0 : 1;
    }

    if (cmd_oeis->parsed()) {
      OeisReport rep =
          oeis_compare(parse_pattern(pattern_text), bfile_path, n_arg, cap);
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"computed", r.computed},
                        {"file_value", r.file_value},
                        {"match", r.match}});
      std::cout << json{{"rows", rows},
                        {"all_match", rep.all_match},
                        {"no_overlap", rep.no_overlap}}
                       .dump(2)
                << "\n";
      return rep.all_match ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
