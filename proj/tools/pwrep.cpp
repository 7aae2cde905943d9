// Command-line front door for the library: run Walnut-style scripts,
// generate and scan word prefixes, run the table search, export DFAOs,
// and run the built-in verification suite.
//
// Exit codes: 0 success / everything TRUE; 1 a sentence decided FALSE,
// a scan found an occurrence, or a verification failed; 2 usage error;
// 3 resource ceiling exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pwrep/catalog.hpp"
#include "pwrep/logic.hpp"
#include "pwrep/repetition.hpp"
#include "pwrep/search.hpp"
#include "pwrep/session.hpp"
#include "pwrep/theorems.hpp"

using nlohmann::json;

namespace {

struct Options {
  bool as_json = false;
  size_t ceiling = 10'000'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int cmd_run(const Options& opt, const std::string& path) {
  pwrep::Session session(opt.ceiling);
  session.run_script(read_file(path));
  for (const auto& ev : session.evals()) {
    if (opt.as_json) {
      json record = {{"eval", ev.name},
                     {"predicate", ev.predicate},
                     {"sentence", ev.is_sentence}};
      if (ev.is_sentence) {
        record["truth"] = ev.truth;
      } else {
        record["states"] = ev.automaton->state_count();
      }
      std::cout << record.dump() << "\n";
    } else if (ev.is_sentence) {
      std::cout << ev.name << " = " << (ev.truth ? "TRUE" : "FALSE") << "\n";
    } else {
      std::cout << ev.name << " = automaton with "
                << ev.automaton->state_count() << " states\n";
    }
  }
  for (const auto& entry : session.log()) {
    if (opt.as_json) {
      std::cout << json{{"formula", entry.formula},
                        {"states", entry.states},
                        {"millis", entry.millis}}
                       .dump()
                << "\n";
    } else {
      std::cout << pwrep::logic::format_stats(entry) << "\n";
    }
  }
  return session.all_true() ? 0 : 1;
}

pwrep::PartialWord resolve_word(const std::string& name, size_t length) {
  if (name.find("->") != std::string::npos) {
    return pwrep::fixed_point_prefix(pwrep::Morphism::parse(name), 0, length);
  }
  return pwrep::named_word_prefix(name, length);
}

int cmd_word(const Options& opt, const std::string& name, size_t length,
             const std::string& scan, size_t min_order, bool min_order_set) {
  pwrep::PartialWord w = resolve_word(name, length);
  if (scan.empty()) {
    if (opt.as_json) {
      std::cout << json{{"word", name},
                        {"length", w.size()},
                        {"holes", w.hole_count()},
                        {"digits", w.digits()}}
                       .dump()
                << "\n";
    } else {
      std::cout << w.digits() << "\n";
    }
    return 0;
  }
  std::optional<pwrep::Occurrence> occ;
  if (scan == "square") {
    occ = pwrep::find_square(w, min_order);
  } else if (scan == "antisquare") {
    occ = pwrep::find_antisquare(w, min_order);
  } else if (scan == "cube") {
    occ = pwrep::find_cube(w, min_order);
  } else if (min_order_set) {
    throw std::invalid_argument("--min-order does not apply to " + scan);
  } else if (scan == "nontrivial-square") {
    occ = pwrep::find_nontrivial_square(w);
  } else {
    occ = pwrep::find_weak_overlap(w);
  }
  if (opt.as_json) {
    json record = {{"word", name},
                   {"length", w.size()},
                   {"scan", scan},
                   {"found", occ.has_value()}};
    if (occ) {
      record["start"] = occ->start;
      record["order"] = occ->order;
    }
    std::cout << record.dump() << "\n";
  } else if (occ) {
    std::cout << scan << " at start " << occ->start << ", order "
              << occ->order << "\n";
  } else {
    std::cout << scan << " absent in first " << w.size() << " symbols\n";
  }
  return occ ? 1 : 0;
}

json search_cell(size_t a, size_t b, pwrep::AntiMode mode, size_t holes,
                 size_t cutoff) {
  pwrep::Budget budget;
  budget.max_squares = a;
  budget.max_anti = b;
  budget.anti_mode = mode;
  budget.max_holes = holes;
  auto t0 = std::chrono::steady_clock::now();
  pwrep::SearchOutcome outcome = pwrep::longest(budget, cutoff);
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return {{"a", a},
          {"b", b},
          {"mode", mode == pwrep::AntiMode::kAntisquare ? "antisquare"
                                                        : "c-antisquare"},
          {"verdict",
           outcome.verdict == pwrep::Verdict::kExact ? "exact" : "at-least"},
          {"length", outcome.length},
          {"witness", outcome.witness.digits()},
          {"nodes", outcome.nodes},
          {"millis", millis}};
}

int cmd_search(const Options& opt, long a, long b, const std::string& mode_name,
               size_t holes, size_t cutoff, const std::string& region) {
  pwrep::AntiMode mode = mode_name == "c-antisquare"
                             ? pwrep::AntiMode::kCAntisquare
                             : pwrep::AntiMode::kAntisquare;
  if (region.empty()) {
    if (a < 0 || b < 0) {
      throw std::invalid_argument("--a and --b are required without --region");
    }
    json cell = search_cell(a, b, mode, holes, cutoff);
    if (opt.as_json) {
      std::cout << cell.dump() << "\n";
    } else {
      std::cout << "a=" << a << " b=" << b << " mode=" << mode_name << ": "
                << (cell["verdict"] == "exact" ? "" : ">=")
                << cell["length"].get<size_t>() << ", witness "
                << cell["witness"].get<std::string>() << " ("
                << cell["nodes"].get<uint64_t>() << " nodes, "
                << cell["millis"].get<long>() << "ms)\n";
    }
    return 0;
  }
  size_t split = region.find('x');
  if (split == std::string::npos) {
    throw std::invalid_argument("--region wants ROWSxCOLS, e.g. 6x14");
  }
  size_t rows = std::stoul(region.substr(0, split));
  size_t cols = std::stoul(region.substr(split + 1));
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("--region wants positive dimensions");
  }
  std::vector<std::vector<json>> grid(rows);
  for (size_t ra = 0; ra < rows; ++ra) {
    for (size_t cb = 0; cb < cols; ++cb) {
      grid[ra].push_back(search_cell(ra, cb, mode, holes, cutoff));
      if (opt.as_json) std::cout << grid[ra].back().dump() << "\n";
    }
  }
  if (!opt.as_json) {
    std::cout << std::setw(5) << "a\\b";
    for (size_t cb = 0; cb < cols; ++cb) std::cout << std::setw(6) << cb;
    std::cout << "\n";
    for (size_t ra = 0; ra < rows; ++ra) {
      std::cout << std::setw(5) << ra;
      for (size_t cb = 0; cb < cols; ++cb) {
        const json& cell = grid[ra][cb];
        std::string text = std::to_string(cell["length"].get<size_t>());
        if (cell["verdict"] != "exact") text = ">=" + text;
        std::cout << std::setw(6) << text;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_export(const Options& opt, const std::string& name,
               const std::string& format) {
  pwrep::Dfao dfao = (name == "T" || name == "VTM")
                         ? pwrep::builtin_dfao(name)
                         : pwrep::catalog_dfao(name);
  (void)opt;
  std::cout << (format == "dot" ? pwrep::to_dot(dfao)
                                : pwrep::to_text(dfao));
  return 0;
}

int cmd_verify(const Options& opt, const std::string& id) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = pwrep::theorems::verification_ids();
  } else if (pwrep::theorems::is_verification_id(id)) {
    ids.push_back(id);
  } else {
    throw std::invalid_argument("unknown verification id: " + id);
  }
  bool all_passed = true;
  for (const std::string& one : ids) {
    pwrep::theorems::Report report = pwrep::theorems::verify(one, opt.ceiling);
    all_passed = all_passed && report.passed;
    if (opt.as_json) {
      std::cout << json{{"id", report.id},
                        {"passed", report.passed},
                        {"method", report.method},
                        {"detail", report.detail}}
                       .dump()
                << "\n";
    } else {
      std::cout << report.id << ": " << (report.passed ? "PASS" : "FAIL")
                << " (" << report.method << ") - " << report.detail << "\n";
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial-word repetition and decision toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json,
               "emit line-delimited JSON records instead of text");
  app.add_option("--ceiling", opt.ceiling,
                 "state-count ceiling per intermediate automaton");

  int exit_code = 0;

  auto* run = app.add_subcommand("run", "run a Walnut-style script file");
  std::string script_path;
  run->add_option("script", script_path, "script file")->required();
  run->callback([&] { exit_code = cmd_run(opt, script_path); });

  auto* word = app.add_subcommand(
      "word", "print or scan a prefix of a named or inline morphic word");
  std::string word_name;
  size_t word_length = 100;
  std::string scan_kind;
  size_t min_order = 1;
  word->add_option("name", word_name,
                   "catalog word id, or a morphism spec like \"0->01, 1->10\" "
                   "(fixed point seeded on 0)")
      ->required();
  word->add_option("--length", word_length, "prefix length");
  word->add_option("--scan", scan_kind, "repetition kind to search for")
      ->check(CLI::IsMember({"square", "antisquare", "cube",
                             "nontrivial-square", "weak-overlap"}));
  word->add_option("--min-order", min_order,
                   "least order for square/antisquare/cube scans");
  word->callback([&] {
    exit_code = cmd_word(opt, word_name, word_length, scan_kind, min_order,
                         word->count("--min-order") > 0);
  });

  auto* search = app.add_subcommand(
      "search", "longest word under square/antisquare budgets");
  long search_a = -1;
  long search_b = -1;
  std::string search_mode = "antisquare";
  size_t search_holes = 1;
  size_t search_cutoff = 64;
  std::string search_region;
  search->add_option("--a", search_a, "distinct-square budget");
  search->add_option("--b", search_b, "anti budget");
  search->add_option("--mode", search_mode, "anti quantity")
      ->check(CLI::IsMember({"antisquare", "c-antisquare"}));
  search->add_option("--holes", search_holes, "exact hole count");
  search->add_option("--cutoff", search_cutoff, "length cutoff");
  search->add_option("--region", search_region,
                     "compute a table region ROWSxCOLS instead of one cell");
  search->callback([&] {
    exit_code = cmd_search(opt, search_a, search_b, search_mode, search_holes,
                           search_cutoff, search_region);
  });

  auto* export_cmd =
      app.add_subcommand("export-dfao", "print a word automaton");
  std::string export_name;
  std::string export_format = "text";
  export_cmd->add_option("name", export_name, "catalog word id, T, or VTM")
      ->required();
  export_cmd->add_option("--format", export_format, "output format")
      ->check(CLI::IsMember({"text", "dot"}));
  export_cmd->callback(
      [&] { exit_code = cmd_export(opt, export_name, export_format); });

  auto* verify =
      app.add_subcommand("verify", "run built-in verifications");
  std::string verify_id;
  verify->add_option("id", verify_id, "verification id or \"all\"")
      ->required();
  verify->callback([&] { exit_code = cmd_verify(opt, verify_id); });

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pwrep::ResourceLimitError& e) {
    std::cerr << "resource ceiling exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
