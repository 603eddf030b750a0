#include "snakeword/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json_format.hpp"
#include "snakeword/bijections.hpp"
#include "snakeword/poset.hpp"
#include "snakeword/render.hpp"
#include "snakeword/snake.hpp"
#include "snakeword/verify.hpp"

namespace snakeword {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kCapVariable = "SNAKEWORD_CAP";

/// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

BinaryWord parse_host_word(const std::string& text) {
  BinaryWord w = parse_word(text);
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "a nonempty word is required");
  return w;
}

std::size_t resolve_cap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kCapVariable)) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kCapVariable) + " must be a positive integer");
  }
  return default_oracle_cap;
}

ordered_json edges_json(const std::set<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back(format_edge(e));
  return out;
}

std::string analyze(const BinaryWord& w, const std::string& format, std::size_t cap, bool& agree) {
  const PiecewisePoset p = poset_from_word(w);
  const ExtremaList e = extrema(p);
  const StructureCounts counts = count_structures(w, cap);
  const std::size_t lrs_nodes = lrs_subword_trie(w).size();
  const std::size_t antichain_nodes = antichain_trie(p).size();
  agree = counts.agree() && lrs_nodes == counts.subwords && antichain_nodes == counts.antichains;

  if (format == "json") {
    ordered_json doc;
    doc["schema"] = "snakeword.analyze/1";
    doc["word"] = w.str();
    doc["d"] = w.size();
    doc["blocks"] = factor_blocks(w).str();
    doc["extrema"] = e.points;
    doc["N"] = e.n();
    doc["counts"] = {{"subwords", counts.subwords},
                     {"antichains", counts.antichains},
                     {"filters", counts.filters},
                     {"matchings", counts.matchings}};
    doc["trie_nodes"] = {{"subword", lrs_nodes}, {"antichain", antichain_nodes}};
    doc["agree"] = agree;
    return detail::dump_json(doc);
  }
  std::ostringstream os;
  os << "word        " << w << "\n";
  os << "d           " << w.size() << "\n";
  os << "blocks      " << factor_blocks(w).str() << "\n";
  os << "extrema     " << format_set(e.points) << "  N = " << e.n() << "\n";
  os << "subwords    " << counts.subwords << "\n";
  os << "antichains  " << counts.antichains << "\n";
  os << "filters     " << counts.filters << "\n";
  os << "matchings   " << counts.matchings << "\n";
  os << "trie nodes  " << lrs_nodes << " subword, " << antichain_nodes << " antichain\n";
  os << "agree       " << (agree ? "true" : "false") << "\n";
  return os.str();
}

std::string count(const BinaryWord& w, const std::string& format, std::size_t cap) {
  const StructureCounts c = count_structures(w, cap);
  if (format == "json") {
    ordered_json doc;
    doc["schema"] = "snakeword.count/1";
    doc["word"] = w.str();
    doc["subwords"] = c.subwords;
    doc["antichains"] = c.antichains;
    doc["filters"] = c.filters;
    doc["matchings"] = c.matchings;
    return detail::dump_json(doc);
  }
  std::ostringstream os;
  os << c.subwords << " " << c.antichains << " " << c.filters << " " << c.matchings << "\n";
  return os.str();
}

std::string render(const BinaryWord& w, const std::string& kind, const std::string& format,
                   const std::optional<std::string>& matching) {
  if (matching && kind != "snake") throw UsageError("--matching applies to --kind snake only");
  if (format == "svg" && kind != "snake") throw UsageError("svg output is available for --kind snake only");
  if (kind == "hasse") {
    const PiecewisePoset p = poset_from_word(w);
    if (format == "dot") return hasse_to_dot(p);
    if (format == "json") return poset_to_json(p);
    return hasse_to_ascii(p);
  }
  if (kind == "subword-trie") {
    const SubwordTrie t = lrs_subword_trie(w);
    if (format == "dot") return trie_to_dot(t, w);
    if (format == "json") return trie_to_json(t, w);
    return trie_to_ascii(t);
  }
  if (kind == "antichain-trie") {
    const AntichainTrie t = antichain_trie(poset_from_word(w));
    if (format == "dot") return trie_to_dot(t, w);
    if (format == "json") return trie_to_json(t, w);
    return trie_to_ascii(t);
  }
  std::optional<SnakeOverlay> overlay;
  if (matching) overlay = make_overlay(w, parse_subword_operand(*matching));
  if (format == "dot") return snake_to_dot(w, overlay);
  if (format == "svg") return snake_to_svg(w, overlay);
  if (format == "json") return snake_to_json(w, overlay);
  return snake_to_ascii(w, overlay);
}

std::string map(const BinaryWord& w, const std::string& direction, const std::string& operand) {
  ordered_json doc;
  doc["schema"] = "snakeword.map/1";
  doc["word"] = w.str();
  doc["direction"] = direction;
  if (direction == "f") {
    const Antichain a{parse_index_list(operand)};
    const FImage img = f_detail(poset_from_word(w), w, a);
    doc["antichain"] = a.elements;
    doc["subword"] = img.subword.str();
    doc["jump_points"] = img.jump_points;
    return detail::dump_json(doc);
  }
  const BinaryWord s = parse_subword_operand(operand);
  if (!is_subword(s, w)) throw Error(ErrorCode::NotASubword, s.str() + " is not a subword of " + w.str());
  if (direction == "finv") {
    doc["subword"] = s.str();
    doc["antichain"] = f_inverse(w, s).elements;
    return detail::dump_json(doc);
  }
  if (direction == "pm") {
    const PmDetail pd = pm_detail(w, s);
    doc["subword"] = s.str();
    doc["matching"] = edges_json(pd.matching.edges);
    doc["fil"] = pd.filter.tiles;
    return detail::dump_json(doc);
  }
  return record_to_json(full_correspondence(w, s));
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::Internal ? exit_verification_failed : exit_usage;
}

}  // namespace

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::string body = trim(text);
  if (body == "∅") return {};
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = trim(body.substr(1, body.size() - 2));
  std::vector<std::size_t> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::MalformedPath, "bad antichain element '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  if (body.back() == ',') throw Error(ErrorCode::MalformedPath, "trailing comma in '" + text + "'");
  return out;
}

BinaryWord parse_subword_operand(const std::string& text) {
  const std::string body = trim(text);
  if (body == "e" || body == "ε") return BinaryWord{};
  return parse_word(body);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subwords, zigzag posets and snake graph matchings of binary words", "snakeword"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::size_t> cap_flag;
  std::string output;
  app.add_option("--cap", cap_flag, "Longest word the brute-force oracles accept (env " + std::string(kCapVariable) + ")")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "Write the document to this file instead of standard output");

  std::string word_text;
  std::string format;

  auto* analyze_cmd = app.add_subcommand("analyze", "Summarize a word and count its four structures");
  analyze_cmd->add_option("word", word_text, "Binary word")->required();
  analyze_cmd->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  auto* count_cmd = app.add_subcommand("count", "Oracle counts: subwords antichains filters matchings");
  count_cmd->add_option("word", word_text, "Binary word")->required();
  count_cmd->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  std::string kind;
  std::optional<std::string> matching;
  auto* render_cmd = app.add_subcommand("render", "Draw a Hasse diagram, trie or snake graph");
  render_cmd->add_option("word", word_text, "Binary word")->required();
  render_cmd->add_option("--kind", kind, "hasse, subword-trie, antichain-trie or snake")
      ->required()
      ->check(CLI::IsMember({"hasse", "subword-trie", "antichain-trie", "snake"}));
  render_cmd->add_option("--format", format, "ascii, dot, svg or json")
      ->check(CLI::IsMember({"ascii", "dot", "svg", "json"}));
  render_cmd->add_option("--matching", matching, "Subword whose matching pm(s) and region fil(s) are drawn");

  std::string direction;
  std::string operand;
  auto* map_cmd = app.add_subcommand("map", "Apply f, f_inverse or pm, or print a full correspondence record");
  map_cmd->add_option("word", word_text, "Binary word")->required();
  map_cmd->add_option("direction", direction, "f, finv, pm or record")
      ->required()
      ->check(CLI::IsMember({"f", "finv", "pm", "record"}));
  map_cmd->add_option("operand", operand, "Antichain such as 1,3,7,9 (for f) or a subword");
  map_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  std::optional<std::size_t> max_length;
  std::optional<std::string> verify_word;
  std::optional<std::string> report_path;
  std::vector<std::string> only;
  std::size_t jobs = 1;
  bool allow_long = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check every property against the oracles");
  auto* scope = verify_cmd->add_option_group("scope");
  scope->add_option("--max-length", max_length, "Sweep all words up to this length")->check(CLI::PositiveNumber);
  scope->add_option("--word", verify_word, "Check a single word");
  scope->require_option(1);
  verify_cmd->add_option("--json-report", report_path, "Also write the JSON report to this file");
  verify_cmd->add_option("--property", only, "Run only the named properties");
  verify_cmd->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--allow-long", allow_long,
                       "Permit --max-length above " + std::to_string(verify_length_guard));
  verify_cmd->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const std::size_t cap = resolve_cap(cap_flag);
    std::string document;
    int status = exit_ok;

    if (analyze_cmd->parsed()) {
      bool agree = false;
      document = analyze(parse_host_word(word_text), format.empty() ? "ascii" : format, cap, agree);
      if (!agree) status = exit_verification_failed;
    } else if (count_cmd->parsed()) {
      document = count(parse_host_word(word_text), format.empty() ? "ascii" : format, cap);
    } else if (render_cmd->parsed()) {
      document = render(parse_host_word(word_text), kind, format.empty() ? "ascii" : format, matching);
    } else if (map_cmd->parsed()) {
      document = map(parse_host_word(word_text), direction, operand);
    } else if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.cap = cap;
      options.jobs = jobs;
      options.only = only;
      if (verify_word) {
        options.word = parse_host_word(*verify_word);
      } else {
        if (*max_length > verify_length_guard && !allow_long) {
          throw UsageError("--max-length above " + std::to_string(verify_length_guard) + " needs --allow-long");
        }
        options.max_length = *max_length;
      }
      const VerifyReport report = run_verification(options);
      if (report_path) {
        std::ofstream file(*report_path);
        if (!file) throw UsageError("cannot write " + *report_path);
        file << report_to_json(report);
      }
      document = format == "json" ? report_to_json(report) : report_to_text(report);
      if (!report.passed()) status = exit_verification_failed;
    }

    if (output.empty()) {
      out << document;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw UsageError("cannot write " + output);
      file << document;
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace snakeword
