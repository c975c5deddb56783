// Command-line front end: count, enumerate, extremal, verify.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 input error,
// 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "treextremal/errors.hpp"
#include "treextremal/json_report.hpp"

namespace tx = treextremal;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string format = "json";
  std::string out;
  std::size_t budget_labeled = tx::EnumerationBudget::kDefaultMaxLabeled;
  bool budget_given = false;

  std::string tree_file;
  std::string caterpillar;
  std::string degseq;
  std::string objective = "min";
  std::string method = "auto";
  bool caterpillars_only = false;
  std::string claim;
  std::size_t max_n = 0;
  std::size_t max_k = 6;
};

tx::EnumerationBudget budget_from(const Options& o) {
  tx::EnumerationBudget b;
  if (o.budget_given) {
    b.max_labeled = o.budget_labeled;
  } else if (const char* env = std::getenv("TREEXTREMAL_BUDGET")) {
    try {
      b.max_labeled = std::stoull(env);
    } catch (const std::exception&) {
      throw tx::InputError(std::string("TREEXTREMAL_BUDGET is not an integer: ") + env);
    }
  }
  return b;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw tx::InputError("cannot open output file " + o.out);
  f << text;
}

std::string dump(const tx::Json& doc) { return doc.dump(2) + "\n"; }

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
    line += quote ? "\"" + cells[i] + "\"" : cells[i];
  }
  return line + "\n";
}

std::string y_cell(const std::optional<tx::Caterpillar>& c) {
  if (!c) return "";
  std::string s;
  for (std::size_t i = 0; i < c->y.size(); ++i) s += (i ? " " : "") + std::to_string(c->y[i]);
  return s;
}

int run_count(const Options& o) {
  tx::Json inputs;
  tx::Tree tree;
  if (!o.caterpillar.empty()) {
    inputs["caterpillar"] = o.caterpillar;
    tree = tx::caterpillar_build(tx::Caterpillar{tx::parse_pendants(o.caterpillar)});
  } else if (!o.tree_file.empty()) {
    inputs["tree_file"] = o.tree_file;
    std::ifstream in(o.tree_file);
    if (!in) throw tx::InputError("cannot read " + o.tree_file);
    tree = tx::read_edge_list(in);
  } else {
    throw tx::InputError("count needs a tree file or --caterpillar");
  }
  emit(o, dump(tx::output_document("count", inputs, tx::tree_summary(tree))));
  return 0;
}

int run_extremal(const Options& o) {
  const auto ds = tx::parse_degree_sequence(o.degseq);
  const auto objective = tx::parse_objective(o.objective);
  const auto method = tx::parse_method(o.method);
  const auto budget = budget_from(o);
  const auto report = tx::find_extremal(ds, objective, method, budget);
  tx::Json inputs{{"degseq", ds.to_string()},
                  {"objective", o.objective},
                  {"method", o.method},
                  {"budget_labeled", budget.max_labeled}};
  if (o.format == "csv") {
    std::string text = csv_join({"canonical_code", "y_vector_or_blank", "phi"});
    for (const auto& opt : report.optimizers)
      text += csv_join({opt.code.code, y_cell(opt.caterpillar), tx::to_decimal(report.optimum)});
    emit(o, text);
  } else {
    emit(o, dump(tx::output_document("extremal", inputs, tx::to_json(report))));
  }
  return 0;
}

int run_enumerate(const Options& o) {
  const auto ds = tx::parse_degree_sequence(o.degseq);
  const auto budget = budget_from(o);
  std::vector<tx::Tree> trees;
  if (o.caterpillars_only) {
    if (ds.k() == 0) {
      trees.push_back(tx::path_tree(ds.n()));
    } else {
      const auto predicted = tx::count_caterpillars(ds);
      if (predicted > budget.max_labeled)
        throw tx::BudgetExceeded("caterpillar enumeration of " + ds.to_string() + " needs " +
                                     tx::to_decimal(predicted) + " caterpillars",
                                 tx::to_decimal(predicted));
      for (const auto& c : tx::enumerate_caterpillars(ds)) trees.push_back(tx::caterpillar_build(c));
    }
  } else {
    trees = tx::enumerate_trees(ds, budget);
  }
  std::string text;
  tx::Json rows = tx::Json::array();
  if (o.format == "csv") text = csv_join({"canonical_code", "y_vector_or_blank", "phi", "wiener"});
  for (const auto& t : trees) {
    const auto code = tx::canonical_form(t).code;
    const auto cat = tx::caterpillar_recognize(t);
    const auto phi = tx::to_decimal(tx::count_subtrees(t));
    const auto wiener = tx::to_decimal(tx::wiener_index(t));
    if (o.format == "csv") {
      text += csv_join({code, y_cell(cat), phi, wiener});
    } else {
      tx::Json row{{"canonical_code", code}};
      row["y_vector"] = cat ? tx::Json(cat->y) : tx::Json(nullptr);
      row["tree"] = tx::to_json(t);
      row["phi"] = phi;
      row["wiener"] = wiener;
      rows.push_back(std::move(row));
    }
  }
  if (o.format != "csv") {
    tx::Json inputs{{"degseq", ds.to_string()}, {"caterpillars_only", o.caterpillars_only}};
    text = dump(tx::output_document("enumerate", inputs, tx::Json{{"count", trees.size()}, {"trees", rows}}));
  }
  emit(o, text);
  return 0;
}

int run_verify(const Options& o) {
  const auto claim = tx::parse_claim(o.claim);
  std::size_t max_n = o.max_n;
  if (max_n == 0) {
    const bool caterpillar_claim = claim == tx::Claim::kValleyShape ||
                                   claim == tx::Claim::kMountainShape ||
                                   claim == tx::Claim::kTrichotomy;
    max_n = caterpillar_claim ? 13 : (claim == tx::Claim::kClosedForms ? 12 : 9);
  }
  const auto report = tx::run_claim(claim, max_n, o.max_k, budget_from(o));
  if (o.format == "csv") {
    std::string text = csv_join({"degree_sequence", "expected", "observed"});
    for (const auto& f : report.failures) text += csv_join({f.degree_sequence, f.expected, f.observed});
    for (const auto& row : report.table) text += csv_join(row);
    emit(o, text);
  } else {
    tx::Json inputs{{"claim", o.claim}, {"max_n", max_n}, {"max_k", o.max_k}};
    emit(o, dump(tx::output_document("verify", inputs, tx::to_json(report))));
  }
  return report.status == tx::Status::kFail ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subtree counts and extremal trees for tree degree sequences"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write output to FILE instead of stdout");
    sub->add_option_function<std::size_t>(
        "--budget-labeled",
        [&](const std::size_t& v) {
          o.budget_labeled = v;
          o.budget_given = true;
        },
        "Cap on labeled trees decoded by full enumeration");
  };

  auto* count = app.add_subcommand("count", "Subtree statistics of one tree");
  count->add_option("tree_file", o.tree_file, "Edge-list file");
  count->add_option("--caterpillar", o.caterpillar, "Pendant vector y, e.g. \"1,0\"");
  add_common(count);

  auto* extremal = app.add_subcommand("extremal", "Trees minimizing or maximizing the subtree count");
  extremal->add_option("--degseq", o.degseq, "Degree sequence, e.g. \"8,3,3,3,2,1*11\"")->required();
  extremal->add_option("--objective", o.objective, "min|max");
  extremal->add_option("--method", o.method, "auto|brute|caterpillar|closed-form");
  add_common(extremal);

  auto* enumerate = app.add_subcommand("enumerate", "All trees realizing a degree sequence");
  enumerate->add_option("--degseq", o.degseq, "Degree sequence")->required();
  enumerate->add_flag("--caterpillars-only", o.caterpillars_only, "Restrict to caterpillars");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "Exhaustive check of one structural claim");
  verify->add_option("claim", o.claim, "Claim id")->required();
  verify->add_option("--max-n", o.max_n, "Largest tree order in the sweep");
  verify->add_option("--max-k", o.max_k, "Largest internal-vertex count (shape claims)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*count) return run_count(o);
    if (*extremal) return run_extremal(o);
    if (*enumerate) return run_enumerate(o);
    if (*verify) return run_verify(o);
  } catch (const tx::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const tx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
