// Command-line driver: builds rings from constructor expressions, lists
// maximal ideals and maximal subrings, and runs the verification checks.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/ringlab.hpp"

namespace {

using namespace ringlab;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

json show_summary(const FiniteRing& r, const Caps& caps, AnalysisCache& cache) {
  RingStudy study(r, caps, cache);
  json out;
  out["label"] = r.label();
  out["order"] = r.order();
  out["char"] = characteristic(r);
  out["commutative"] = is_commutative(r);
  out["simple"] = is_simple(r);
  out["center"] = center(r).count();
  out["units"] = units(r).count();
  out["nilpotents"] = nilpotents(r).count();
  out["maxl"] = static_cast<int>(study.maximal(Side::left).size());
  out["maxr"] = static_cast<int>(study.maximal(Side::right).size());
  out["max_two_sided"] = static_cast<int>(study.maximal(Side::two_sided).size());
  const auto& p = study.partition();
  out["j_order"] = p.jacobson.count();
  out["quasi_duo_left"] = p.maxl_not_two.empty();
  out["quasi_duo_right"] = p.maxr_not_two.empty();
  try {
    out["rgmax"] = static_cast<int>(cache.maximal_subrings_for(r, caps.max_subrings).size());
  } catch (const cap_error&) {
    out["rgmax"] = nullptr;
  }
  return out;
}

std::string show_csv(const json& j) {
  const char* fields[] = {"order", "char",  "center",        "units", "nilpotents", "j_order",
                          "maxl",  "maxr",  "max_two_sided", "rgmax"};
  std::string head, row;
  for (const char* f : fields) {
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += f;
    row += j[f].is_null() ? "" : j[f].dump();
  }
  return head + "\n" + row + "\n";
}

std::string zoo_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "ring,pass,fail,skipped_cap,not_applicable\n";
  for (const auto& rep : reports) {
    int counts[4] = {0, 0, 0, 0};
    for (const auto& c : rep.checks) counts[static_cast<int>(c.status)]++;
    out += rep.spec_text + "," + std::to_string(counts[0]) + "," + std::to_string(counts[1]) +
           "," + std::to_string(counts[2]) + "," + std::to_string(counts[3]) + "\n";
  }
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  if (s == "two") return Side::two_sided;
  throw ring_error("--side must be left, right or two");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  Caps caps;
  app.add_option("--max-order", caps.max_order, "largest ring order to construct")
      ->capture_default_str();
  app.add_option("--max-ideals", caps.max_ideals, "cap on distinct ideals per enumeration")
      ->capture_default_str();
  app.add_option("--max-subrings", caps.max_subrings, "cap on distinct subrings per enumeration")
      ->capture_default_str();

  std::string spec_text, side_text = "left", checks_text = "all";
  std::string config_path, json_out, csv_out;
  bool csv_flag = false;

  auto* show = app.add_subcommand("show", "summarize a ring");
  show->add_option("spec", spec_text, "ring expression, e.g. M(2,GF(2))")->required();
  show->add_flag("--csv", csv_flag, "emit the counts as CSV instead of JSON");

  auto* maxsub = app.add_subcommand("maxsub", "list maximal subrings");
  maxsub->add_option("spec", spec_text)->required();

  auto* maxideals = app.add_subcommand("maxideals", "list maximal ideals");
  maxideals->add_option("spec", spec_text)->required();
  maxideals->add_option("--side", side_text, "left | right | two")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification checks on one ring");
  verify->add_option("spec", spec_text)->required();
  verify->add_option("--checks", checks_text, "comma-separated check names, or 'all'")
      ->capture_default_str();

  auto* zoo = app.add_subcommand("zoo", "run every check over a ring zoo");
  zoo->add_option("--config", config_path, "zoo config JSON (rings + caps)");
  zoo->add_option("--json", json_out, "also write the report to this file");
  zoo->add_option("--csv", csv_out, "write per-ring status counts to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    AnalysisCache cache;
    if (show->parsed()) {
      FiniteRing r = build_spec(parse_spec(spec_text), caps);
      json j = show_summary(r, caps, cache);
      if (csv_flag)
        std::cout << show_csv(j);
      else
        std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (maxsub->parsed()) {
      FiniteRing r = build_spec(parse_spec(spec_text), caps);
      auto subs = maximal_subrings(r, caps.max_subrings);
      json j{{"label", r.label()},
             {"order", r.order()},
             {"count", static_cast<int>(subs.size())},
             {"subrings", subsets_to_json(subs)}};
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (maxideals->parsed()) {
      Side side = parse_side(side_text);
      FiniteRing r = build_spec(parse_spec(spec_text), caps);
      RingStudy study(r, caps, cache);
      const auto& ideals = study.maximal(side);
      json j{{"label", r.label()},
             {"order", r.order()},
             {"side", side_text},
             {"count", static_cast<int>(ideals.size())},
             {"ideals", subsets_to_json(ideals)}};
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      std::optional<std::vector<std::string>> selected;
      if (checks_text != "all") {
        selected.emplace();
        std::string cur;
        for (char ch : checks_text + ",") {
          if (ch == ',') {
            if (!cur.empty()) selected->push_back(cur);
            cur.clear();
          } else {
            cur += ch;
          }
        }
        for (const auto& name : *selected) {
          bool known = false;
          for (const auto& [cname, fn] : check_catalog())
            if (cname == name) known = true;
          if (!known) throw ring_error("unknown check: " + name);
        }
      }
      VerificationReport rep =
          verify_ring(spec_text, caps, cache, selected ? &*selected : nullptr);
      std::cout << report_to_json(rep).dump(2) << "\n";
      bool any_fail = false, any_skip = false;
      for (const auto& c : rep.checks) {
        any_fail |= c.status == CheckStatus::fail;
        any_skip |= c.status == CheckStatus::skipped_cap;
      }
      if (any_fail) return kExitVerificationFailure;
      if (any_skip) return kExitCapExceeded;
      return kExitOk;
    }
    if (zoo->parsed()) {
      ZooConfig config;
      config.caps = caps;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ring_error("cannot open config: " + config_path);
        json j;
        in >> j;
        if (j.contains("rings")) config.rings = j["rings"].get<std::vector<std::string>>();
        if (j.contains("caps")) {
          const json& c = j["caps"];
          if (app.count("--max-order") == 0 && c.contains("max_order"))
            config.caps.max_order = c["max_order"].get<int>();
          if (app.count("--max-ideals") == 0 && c.contains("max_ideals"))
            config.caps.max_ideals = c["max_ideals"].get<long>();
          if (app.count("--max-subrings") == 0 && c.contains("max_subrings"))
            config.caps.max_subrings = c["max_subrings"].get<long>();
        }
      }
      auto reports = run_zoo(config, &cache);
      json j = reports_to_json(reports);
      std::cout << j.dump(2) << "\n";
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << j.dump(2) << "\n";
      }
      if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        out << zoo_csv(reports);
      }
      for (const auto& rep : reports)
        if (!rep.all_ok()) return kExitVerificationFailure;
      return kExitOk;
    }
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
