#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "placticc/crystal.hpp"
#include "placticc/ctree.hpp"
#include "placticc/insertion.hpp"
#include "placticc/rewriting.hpp"
#include "placticc/words.hpp"

using json = nlohmann::json;
using namespace placticc;

namespace {

// Thrown for input problems that are not parse errors: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string text;
  bool plain = false;
  PlainWord letters;
  DecoratedWord word;
};

Input read_any(const std::string& s, int n) {
  Input in;
  in.text = s;
  const auto first = s.find_first_not_of(' ');
  in.plain = first == std::string::npos || s[first] != '[';
  if (in.plain) in.letters = parse_plain(s, n);
  else in.word = parse_word(s, n);
  return in;
}

json report_json(const CoherenceReport& r) {
  json j;
  j["n"] = r.n;
  j["variant"] = variant_name(r.variant);
  j["total"] = r.total;
  j["max_shape"] = {r.max_shape.a_len, r.max_shape.b_len};
  j["violations"] = json::array();
  for (const Violation& v : r.violations)
    j["violations"].push_back({{"word", v.word}, {"reason", v.reason}});
  j["shape_histogram"] = json::object();
  for (const auto& [shape, count] : r.shape_histogram)
    j["shape_histogram"]["(" + std::to_string(shape.first) + "," +
                         std::to_string(shape.second) + ")"] = count;
  return j;
}

json tree_json(const CTree& t) {
  json j;
  j["rank"] = t.rank();
  j["n"] = t.n();
  for (const Vertex& v : t.vertices())
    if (t.label(v)) j[vertex_key(v)] = t.label(v);
  return j;
}

CTree tree_from_json(const json& j, int n) {
  if (!j.is_object()) throw UsageError("tree JSON must be an object");
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw UsageError("tree JSON needs an integer \"rank\"");
  if (j.contains("n") && j["n"].get<int>() != n)
    throw UsageError("tree rank n=" + std::to_string(j["n"].get<int>()) +
                     " does not match --n " + std::to_string(n));
  CTree t(j["rank"].get<int>(), n);
  for (const auto& [key, value] : j.items()) {
    if (key == "rank" || key == "n") continue;
    auto v = parse_vertex_key(key);
    if (!v || !t.contains(*v)) throw UsageError("unknown vertex key \"" + key + "\"");
    if (!value.is_number_integer() || value.get<int>() < 0)
      throw UsageError("label of \"" + key + "\" must be a nonnegative integer");
    t.set_label(*v, value.get<int>());
  }
  return t;
}

json verify_trees(int n, unsigned jobs) {
  json j;
  j["violations"] = json::array();
  std::size_t total = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const CTree& t : enumerate_trees(k, n, jobs)) {
      ++total;
      const DecoratedWord w = reading(t);
      auto bad = [&](const std::string& why) {
        j["violations"].push_back({{"tree", tree_json(t)}, {"reason", why}});
      };
      if (!is_highest_weight(w, n)) bad("reading is not of highest weight");
      if (tree_normal_form(t) != to_word(normal_form(w, n)))
        bad("tree normal form differs from insertion");
      if (encode(w, n) != t) bad("encode does not invert reading");
    }
  }
  j["n"] = n;
  j["suite"] = "trees";
  j["total"] = total;
  return j;
}

json verify_epsilon(int n) {
  const Polygraph p(n, Variant::ACol);
  const std::vector<Column> gens = p.generators();
  json j;
  j["violations"] = json::array();
  std::size_t traces = 0;
  const std::size_t t = n <= 2 ? 4 : 3;
  std::vector<std::size_t> idx(t, 0);
  for (;;) {
    DecoratedWord w;
    for (std::size_t i : idx) w.push_back(gens[i]);
    for (StrategyKind kind : {StrategyKind::Leftmost, StrategyKind::Rightmost}) {
      const Strategy s = run_strategy(p, w, kind);
      ++traces;
      const long len = long(s.trace.size()), proj = projected_length(s);
      const long tt = long(t);
      if (!check_epsilon_bound(s) || 4 * (len - proj) > tt * tt * (3 * tt + 1) ||
          !projection_is_valid(s, p))
        j["violations"].push_back({{"word", format_word(w)}, {"reason", "epsilon bound"}});
    }
    std::size_t k = 0;
    while (k < t && ++idx[k] == gens.size()) idx[k++] = 0;
    if (k == t) break;
  }
  j["n"] = n;
  j["suite"] = "epsilon";
  j["length"] = t;
  j["total"] = traces;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Type C plactic monoid toolkit"};
  app.require_subcommand(1);
  int n = 0;
  unsigned jobs = 1;

  std::string a, b, op = "f", variant = "acol", out_path, suite = "shapes", file;
  int i = 1, rank = 3;

  auto with_n = [&](CLI::App* sub) {
    sub->add_option("--n", n, "rank of the alphabet")->required()->check(CLI::PositiveNumber);
  };

  auto* insert = app.add_subcommand("insert", "insert column B into column A");
  with_n(insert);
  insert->add_option("colA", a)->required();
  insert->add_option("colB", b)->required();

  auto* normalize = app.add_subcommand("normalize", "normal form of a decorated word");
  with_n(normalize);
  normalize->add_option("word", a)->required();

  auto* prod = app.add_subcommand("product", "product of two decorated words");
  with_n(prod);
  prod->add_option("wordA", a)->required();
  prod->add_option("wordB", b)->required();

  auto* crystal = app.add_subcommand("crystal", "apply e_i or f_i");
  with_n(crystal);
  crystal->add_option("--op", op)->check(CLI::IsMember({"e", "f"}));
  crystal->add_option("--i", i)->required();
  crystal->add_option("word", a)->required();

  auto* hw = app.add_subcommand("hw", "highest weight of a word");
  with_n(hw);
  hw->add_option("word", a)->required();

  auto* tree = app.add_subcommand("tree", "C-tree codec");
  tree->require_subcommand(1);
  auto* tenc = tree->add_subcommand("encode", "tree of a highest-weight word");
  with_n(tenc);
  tenc->add_option("word", a)->required();
  auto* tdec = tree->add_subcommand("decode", "reading of a tree given as JSON");
  with_n(tdec);
  tdec->add_option("file", file, "JSON file, - for stdin")->required();
  auto* tenum = tree->add_subcommand("enumerate", "all valid trees");
  with_n(tenum);
  tenum->add_option("--rank", rank)->check(CLI::Range(1, 4));
  tenum->add_option("--jobs", jobs);

  auto* branch = app.add_subcommand("branchings", "critical branchings report");
  with_n(branch);
  branch->add_option("--variant", variant)->check(CLI::IsMember({"acol", "acol_bullet"}));
  branch->add_option("--out", out_path);
  branch->add_option("--jobs", jobs);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  with_n(verify);
  verify->add_option("--suite", suite)->check(CLI::IsMember({"shapes", "trees", "epsilon", "all"}));
  verify->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*insert) {
    const Column ca = parse_column(a, n), cb = parse_column(b, n);
    auto [d1, d2] = insert_pair(ca, cb, n);
    std::cout << format_word({d1, d2}) << "\n";
    return 0;
  }
  if (*normalize) {
    std::cout << format_word(to_word(normal_form(parse_word(a, n), n))) << "\n";
    return 0;
  }
  if (*prod) {
    const auto x = normal_form(parse_word(a, n), n);
    const auto y = normal_form(parse_word(b, n), n);
    std::cout << format_word(to_word(decorated_product(x, y, n))) << "\n";
    return 0;
  }
  if (*crystal) {
    if (i < 1 || i > n) throw UsageError("--i must lie in 1.." + std::to_string(n));
    const Op o = op == "e" ? Op::E : Op::F;
    const Input in = read_any(a, n);
    if (in.plain) {
      auto r = apply(in.letters, o, i, n);
      std::cout << (r ? format_plain(*r) : "none") << "\n";
    } else {
      auto r = apply(in.word, o, i, n);
      std::cout << (r ? format_word(*r) : "none") << "\n";
    }
    return 0;
  }
  if (*hw) {
    const Input in = read_any(a, n);
    std::cout << (in.plain ? format_plain(highest_weight(in.letters, n))
                           : format_word(highest_weight(in.word, n)))
              << "\n";
    return 0;
  }
  if (*tenc) {
    std::cout << tree_json(encode(parse_word(a, n), n)).dump() << "\n";
    return 0;
  }
  if (*tdec) {
    json j;
    try {
      if (file == "-") {
        j = json::parse(std::cin);
      } else {
        std::ifstream f(file);
        if (!f) throw UsageError("cannot open " + file);
        j = json::parse(f);
      }
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("tree JSON: ") + e.what());
    }
    const CTree t = tree_from_json(j, n);
    std::cout << format_word(reading(t)) << "\n";
    const auto problems = validate(t);
    for (const auto& p : problems) std::cerr << "invalid tree: " << p << "\n";
    return problems.empty() ? 0 : 1;
  }
  if (*tenum) {
    json j;
    j["rank"] = rank;
    j["n"] = n;
    j["trees"] = json::array();
    for (const CTree& t : enumerate_trees(rank, n, jobs)) j["trees"].push_back(tree_json(t));
    j["count"] = j["trees"].size();
    std::cout << j.dump(1) << "\n";
    return 0;
  }
  if (*branch) {
    const Polygraph p(n, parse_variant(variant));
    const CoherenceReport r = verify_coherence(p, jobs);
    const std::string text = report_json(r).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw UsageError("cannot write " + out_path);
      f << text;
    }
    return r.violations.empty() ? 0 : 1;
  }
  if (*verify) {
    json j;
    j["n"] = n;
    j["suite"] = suite;
    std::size_t bad = 0;
    if (suite == "shapes" || suite == "all") {
      json shapes;
      int ma = 0, mb = 0;
      for (Variant v : {Variant::ACol, Variant::ACol_bullet}) {
        const CoherenceReport r = verify_coherence(Polygraph(n, v), jobs);
        shapes[variant_name(v)] = report_json(r);
        ma = std::max(ma, r.max_shape.a_len);
        mb = std::max(mb, r.max_shape.b_len);
        bad += r.violations.size();
      }
      j["shapes"] = shapes;
      j["max_shape"] = {ma, mb};
    }
    if (suite == "trees" || suite == "all") {
      j["trees"] = verify_trees(n, jobs);
      bad += j["trees"]["violations"].size();
    }
    if (suite == "epsilon" || suite == "all") {
      j["epsilon"] = verify_epsilon(n);
      bad += j["epsilon"]["violations"].size();
    }
    j["violation_count"] = bad;
    std::cout << j.dump(2) << "\n";
    return bad == 0 ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
