// Copyright 2026 The smq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "smq/alpha.hpp"
#include "smq/gale_shapley.hpp"
#include "smq/generate.hpp"
#include "smq/link.hpp"
#include "smq/model.hpp"
#include "smq/oracle.hpp"
#include "smq/stability.hpp"

namespace smq::cli {

namespace {

using nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QuantInstance LoadInstance(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw ValidationError(ValidationErrorKind::kSyntax,
                            "cannot read " + path);
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return ParseInstance(text);
}

void PrintPairs(std::ostream& out, const QuantInstance& instance,
                const Marriage& marriage) {
  for (int m = 0; m < marriage.size(); ++m) {
    const int w = marriage.wife(m);
    out << PersonName(Side::kMen, m) << " -- " << PersonName(Side::kWomen, w)
        << "  p(m,w)=" << instance.score(Side::kMen, m, w)
        << " p(w,m)=" << instance.score(Side::kWomen, w, m)
        << " la=" << LinkValue(instance, m, w, LinkMode::kAdditive)
        << " lm=" << LinkValue(instance, m, w, LinkMode::kMaximal) << '\n';
  }
}

// Candidates sorted by decreasing score; adjacent candidates joined by ">"
// when the gap reaches alpha and by the incomparability sign otherwise.
std::string SemiorderChain(const SemiorderProfile& profile, Side side,
                           int person) {
  std::vector<int> order(profile.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return profile.instance().score(side, person, a) >
           profile.instance().score(side, person, b);
  });
  std::string chain = PersonName(Opposite(side), order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) {
    chain += profile.StrictlyPrefers(side, person, order[i - 1], order[i])
                 ? " > "
                 : " ⋈ ";
    chain += PersonName(Opposite(side), order[i]);
  }
  return chain;
}

std::string WeakChain(const WeakProfile& profile, Side side, int person) {
  std::string chain;
  const auto& entries = profile.entries(side, person);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) {
      chain += entries[i - 1].value == entries[i].value ? " = " : " > ";
    }
    chain += PersonName(Opposite(side), entries[i].candidate) + "(" +
             std::to_string(entries[i].value) + ")";
  }
  return chain;
}

struct SolveFlags {
  std::string notion;
  std::optional<Score> alpha;
  std::string rule = "score-sum";
  std::string input;
  bool pretty = false;
};

int DoSolve(const SolveFlags& flags, std::ostream& out) {
  const bool wants_alpha = flags.notion == "lex-alpha";
  if (wants_alpha != flags.alpha.has_value()) {
    throw UsageError(wants_alpha ? "--alpha is required with lex-alpha"
                                 : "--alpha is only valid with lex-alpha");
  }
  std::optional<Alpha> alpha;
  if (flags.alpha) {
    try {
      alpha = Alpha(*flags.alpha);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const QuantInstance instance = LoadInstance(flags.input);

  std::optional<Marriage> marriage;
  std::optional<LinkMode> link;
  if (flags.notion == "male") {
    marriage = GaleShapley(DeriveClassical(instance), Side::kMen);
  } else if (flags.notion == "female") {
    marriage = GaleShapley(DeriveClassical(instance), Side::kWomen);
  } else if (flags.notion == "lex-alpha") {
    marriage = LexMaleAlphaGs(instance, *alpha, ScoreSumRule);
  } else {
    link =
        flags.notion == "link-add" ? LinkMode::kAdditive : LinkMode::kMaximal;
    marriage = LinkStableGs(instance, *link);
  }

  ordered_json doc;
  doc["match"] = marriage->partner_of_man();
  if (link) doc["link"] = MarriageLink(instance, *marriage, *link);
  out << doc.dump() << '\n';
  if (flags.pretty) PrintPairs(out, instance, *marriage);
  return kOk;
}

struct CheckFlags {
  std::string notion;
  std::optional<Score> alpha;
  std::string marriage;
  std::string input;
  bool pretty = false;
};

Notion NotionOrUsage(const std::string& name, std::optional<Score> alpha) {
  try {
    return ParseNotion(name, alpha);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int DoCheck(const CheckFlags& flags, std::ostream& out, std::ostream& err) {
  const Notion notion = NotionOrUsage(flags.notion, flags.alpha);
  const QuantInstance instance = LoadInstance(flags.input);
  std::optional<Marriage> marriage;
  try {
    marriage = ParseMarriageList(flags.marriage);
  } catch (const MalformedMarriage& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedMarriage;
  }
  if (marriage->size() != instance.size()) {
    err << "error: marriage has " << marriage->size()
        << " entries but the instance has n = " << instance.size() << '\n';
    return kMalformedMarriage;
  }
  const BlockingReport report = BlockingPairs(instance, *marriage, notion);
  out << SerializeReport(report) << '\n';
  if (flags.pretty) {
    if (report.stable()) out << "stable\n";
    for (const auto& pair : report.pairs) {
      out << "blocking (" << PersonName(Side::kMen, pair.man) << ","
          << PersonName(Side::kWomen, pair.woman) << "): man "
          << pair.witness.man_candidate << " vs " << pair.witness.man_current
          << ", woman " << pair.witness.woman_candidate << " vs "
          << pair.witness.woman_current << '\n';
    }
  }
  return report.stable() ? kOk : kUnstable;
}

struct EnumerateFlags {
  std::string notion;
  std::optional<Score> alpha;
  std::string input;
  unsigned jobs = 1;
  int max_n = OracleOptions{}.max_n;
  bool pretty = false;
};

int DoEnumerate(const EnumerateFlags& flags, std::ostream& out) {
  const Notion notion = NotionOrUsage(flags.notion, flags.alpha);
  const QuantInstance instance = LoadInstance(flags.input);
  StableSet set;
  try {
    set = EnumerateStable(instance, notion,
                          OracleOptions{flags.max_n, flags.jobs});
  } catch (const SizeBoundError& e) {
    throw UsageError(std::string(e.what()) + " (raise it with --max-n)");
  }
  out << SerializeStableSet(set) << '\n';
  if (flags.pretty) {
    for (const auto& entry : set.entries) {
      out << "{";
      for (int m = 0; m < entry.marriage.size(); ++m) {
        out << (m ? "," : "") << "(" << PersonName(Side::kMen, m) << ","
            << PersonName(Side::kWomen, entry.marriage.wife(m)) << ")";
      }
      out << "}" << (entry.undominated ? " undominated" : "")
          << " la=" << entry.link_add << " lm=" << entry.link_max << '\n';
    }
  }
  return kOk;
}

struct TransformFlags {
  std::optional<Score> alpha;
  bool link_add = false;
  bool link_max = false;
  std::string input;
  bool pretty = false;
};

int DoTransform(const TransformFlags& flags, std::ostream& out) {
  const int chosen =
      int{flags.alpha.has_value()} + int{flags.link_add} + int{flags.link_max};
  if (chosen != 1) {
    throw UsageError(
        "transform needs exactly one of --alpha, --link-add, --link-max");
  }
  std::optional<Alpha> alpha;
  if (flags.alpha) {
    try {
      alpha = Alpha(*flags.alpha);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const QuantInstance instance = LoadInstance(flags.input);
  const int n = instance.size();
  ordered_json doc;
  std::vector<std::string> lines;

  if (alpha) {
    const SemiorderProfile profile = AlphaTransform(instance, *alpha);
    doc["transform"] = "alpha";
    doc["alpha"] = alpha->value();
    for (Side side : {Side::kMen, Side::kWomen}) {
      ordered_json people = ordered_json::array();
      for (int person = 0; person < n; ++person) {
        ordered_json prefers = ordered_json::array();
        ordered_json incomparable = ordered_json::array();
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (profile.StrictlyPrefers(side, person, a, b)) {
              prefers.push_back({a, b});
            } else if (a < b && profile.Incomparable(side, person, a, b)) {
              incomparable.push_back({a, b});
            }
          }
        }
        std::string chain = SemiorderChain(profile, side, person);
        lines.push_back(PersonName(side, person) + ": " + chain);
        people.push_back({{"person", PersonName(side, person)},
                          {"chain", chain},
                          {"prefers", std::move(prefers)},
                          {"incomparable", std::move(incomparable)}});
      }
      doc[side == Side::kMen ? "men" : "women"] = std::move(people);
    }
  } else {
    const LinkMode mode =
        flags.link_add ? LinkMode::kAdditive : LinkMode::kMaximal;
    const WeakProfile profile = LinkTransform(instance, mode);
    doc["transform"] = ToString(mode);
    doc["has_ties"] = HasTies(profile);
    for (Side side : {Side::kMen, Side::kWomen}) {
      ordered_json people = ordered_json::array();
      for (int person = 0; person < n; ++person) {
        std::vector<Score> values(n);
        for (int c = 0; c < n; ++c) values[c] = profile.value(side, person, c);
        std::string chain = WeakChain(profile, side, person);
        lines.push_back(PersonName(side, person) + ": " + chain);
        people.push_back({{"person", PersonName(side, person)},
                          {"chain", chain},
                          {"values", values}});
      }
      doc[side == Side::kMen ? "men" : "women"] = std::move(people);
    }
  }
  out << doc.dump() << '\n';
  if (flags.pretty) {
    for (const auto& line : lines) out << line << '\n';
  }
  return kOk;
}

struct GenFlags {
  int n = 0;
  std::uint64_t seed = 0;
  Score max_score = 100;
};

int DoGen(const GenFlags& flags, std::ostream& out) {
  if (flags.n < 1) throw UsageError("--n must be at least 1");
  if (flags.max_score < flags.n) {
    throw UsageError("--max-score must be at least --n");
  }
  if (flags.max_score > kMaxScore) throw UsageError("--max-score too large");
  out << SerializeInstance(RandomInstance(flags.n, flags.seed, flags.max_score))
      << '\n';
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stable marriage with quantitative preferences", "smq"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute one marriage");
  solve_cmd->add_option("--notion", solve.notion, "Which solver to run")
      ->required()
      ->check(CLI::IsMember(
          {"male", "female", "lex-alpha", "link-add", "link-max"}));
  solve_cmd->add_option("--alpha", solve.alpha, "Gap for lex-alpha");
  solve_cmd->add_option("--rule", solve.rule, "Voting rule")
      ->check(CLI::IsMember({"score-sum"}));
  solve_cmd
      ->add_option("-i,--input", solve.input, "Instance JSON ('-' = stdin)")
      ->required();
  solve_cmd->add_flag("--pretty", solve.pretty, "Also print a pairing table");

  CheckFlags check;
  auto* check_cmd =
      app.add_subcommand("check", "Report blocking pairs of a marriage");
  check_cmd->add_option("--notion", check.notion, "Stability notion")
      ->required()
      ->check(CLI::IsMember({"classical", "alpha", "link-add", "link-max"}));
  check_cmd->add_option("--alpha", check.alpha, "Gap for notion alpha");
  check_cmd
      ->add_option("--marriage", check.marriage,
                   "Comma-separated 0-based woman per man")
      ->required();
  check_cmd
      ->add_option("-i,--input", check.input, "Instance JSON ('-' = stdin)")
      ->required();
  check_cmd->add_flag("--pretty", check.pretty, "Also print a summary");

  EnumerateFlags enumerate;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List every stable marriage");
  enumerate_cmd->add_option("--notion", enumerate.notion, "Stability notion")
      ->required()
      ->check(CLI::IsMember({"classical", "alpha", "link-add", "link-max"}));
  enumerate_cmd->add_option("--alpha", enumerate.alpha, "Gap for notion alpha");
  enumerate_cmd
      ->add_option("-i,--input", enumerate.input, "Instance JSON ('-' = stdin)")
      ->required();
  enumerate_cmd
      ->add_option("--jobs", enumerate.jobs, "Worker threads (0 = auto)")
      ->capture_default_str();
  enumerate_cmd->add_option("--max-n", enumerate.max_n, "Largest accepted n")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--pretty", enumerate.pretty,
                          "Also print one line per marriage");

  TransformFlags transform;
  auto* transform_cmd =
      app.add_subcommand("transform", "Print a derived preference profile");
  transform_cmd->add_option("--alpha", transform.alpha, "Semiorder gap");
  transform_cmd->add_flag("--link-add", transform.link_add,
                          "Additive link profile");
  transform_cmd->add_flag("--link-max", transform.link_max,
                          "Maximal link profile");
  transform_cmd
      ->add_option("-i,--input", transform.input, "Instance JSON ('-' = stdin)")
      ->required();
  transform_cmd->add_flag("--pretty", transform.pretty,
                          "Also print one line per person");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "Market size")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--max-score", gen.max_score, "Largest score")
      ->capture_default_str();

  std::vector<const char*> argv{"smq"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return DoSolve(solve, out);
    if (check_cmd->parsed()) return DoCheck(check, out, err);
    if (enumerate_cmd->parsed()) return DoEnumerate(enumerate, out);
    if (transform_cmd->parsed()) return DoTransform(transform, out);
    return DoGen(gen, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kInvalidInstance;
  }
}

}  // namespace smq::cli
