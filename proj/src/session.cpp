#include "pwrep/session.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace pwrep {
namespace {

using logic::ParseError;

// Splits a script into commands at semicolons outside quotes.
std::vector<std::string> split_commands(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  bool quoted = false;
  for (char c : text) {
    if (c == '"') quoted = !quoted;
    if (c == ';' && !quoted) {
      out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in script");
  for (char c : current) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("script ends without ';'");
    }
  }
  return out;
}

// Tokens of one command; quoted strings become single tokens with the
// quotes stripped.
std::vector<std::string> command_tokens(const std::string& command) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < command.size()) {
    char c = command[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '"') {
      size_t end = command.find('"', i + 1);
      if (end == std::string::npos) {
        throw ParseError("unterminated quote in command");
      }
      tokens.push_back(command.substr(i + 1, end - i - 1));
      i = end + 1;
      continue;
    }
    size_t end = i;
    while (end < command.size() && command[end] != '"' &&
           !std::isspace(static_cast<unsigned char>(command[end]))) {
      ++end;
    }
    tokens.push_back(command.substr(i, end - i));
    i = end;
  }
  return tokens;
}

}  // namespace

Session::Session(size_t state_ceiling) : ceiling_(state_ceiling) {}

bool Session::all_true() const {
  for (const EvalResult& e : evals_) {
    if (e.is_sentence && !e.truth) return false;
  }
  return true;
}

const Dfao& Session::word(const std::string& name) {
  auto it = words_.find(name);
  if (it != words_.end()) return it->second;
  try {
    auto [pos, inserted] = words_.emplace(name, builtin_dfao(name));
    (void)inserted;
    return pos->second;
  } catch (const std::invalid_argument&) {
    throw ParseError("unknown word " + name);
  }
}

const Morphism& Session::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw ParseError("unknown morphism " + name);
  return it->second;
}

bool Session::has_word(const std::string& name) const {
  return words_.count(name) > 0;
}

void Session::run_script(std::string_view text) {
  for (const std::string& command : split_commands(text)) {
    std::vector<std::string> tokens = command_tokens(command);
    if (tokens.empty()) continue;
    run_command(tokens);
  }
}

void Session::run_command(const std::vector<std::string>& tokens) {
  const std::string& keyword = tokens[0];
  auto arity = [&](size_t n) {
    if (tokens.size() != n + 1) {
      throw ParseError(keyword + " expects " + std::to_string(n) +
                       " arguments");
    }
  };
  if (keyword == "morphism") {
    arity(2);
    morphisms_.insert_or_assign(tokens[1], Morphism::parse(tokens[2]));
    return;
  }
  if (keyword == "promote") {
    arity(2);
    words_.insert_or_assign(tokens[1],
                            dfao_from_uniform_fixed_point(morphism(tokens[2])));
    return;
  }
  if (keyword == "image") {
    arity(3);
    const Morphism& m = morphism(tokens[2]);
    const Dfao& inner = word(tokens[3]);
    words_.insert_or_assign(tokens[1], image_dfao(inner, m));
    return;
  }
  if (keyword == "eval") {
    arity(2);
    logic::Predicate p = logic::parse_predicate(tokens[2]);
    logic::CompileEnv env;
    env.base = p.base;
    env.words = &words_;
    env.state_ceiling = ceiling_;
    env.log = &log_;
    EvalResult result;
    result.name = tokens[1];
    result.predicate = tokens[2];
    if (logic::free_variables(p.body).empty()) {
      result.is_sentence = true;
      result.truth = logic::decide(p, env);
    } else {
      result.is_sentence = false;
      result.automaton = logic::compile_predicate(p, env);
    }
    evals_.push_back(std::move(result));
    return;
  }
  throw ParseError("unknown command " + keyword);
}

}  // namespace pwrep
