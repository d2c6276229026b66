#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "isemlab/divisibility.hpp"
#include "isemlab/enumerate.hpp"
#include "isemlab/morphisms.hpp"
#include "isemlab/nilpotence.hpp"
#include "isemlab/structure.hpp"
#include "isemlab/table_io.hpp"
#include "isemlab/verify.hpp"

namespace {

using namespace isemlab;
using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 clean (conjecture counterexamples included: they are output,
// not failure), 1 theorem violation, 2 usage or input error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

std::string default_out_dir() {
  if (const char* env = std::getenv("ISEMLAB_OUT_DIR")) return env;
  return ".";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

std::string join_elements(const FiniteSemigroup& s,
                          const std::vector<Element>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += s.label(xs[i]);
  }
  return out.empty() ? "none" : out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::vector<int> class_sizes(const std::vector<std::vector<Element>>& classes) {
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

std::string size_list(const std::vector<int>& sizes) {
  std::string out;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(sizes[i]);
  }
  return out;
}

// ---- check ----------------------------------------------------------------

int cmd_check(const std::string& path, const std::string& out_path) {
  FiniteSemigroup s = read_table_file(path);
  GreenPartition green = green_relations(s);
  bool inverse = is_inverse_semigroup(s);
  bool clifford = is_clifford(s);
  SquaringAnalysis squaring = analyze_squaring(s);

  bool commutative = is_commutative(s);
  bool band = is_band(s);
  bool regular = is_regular(s);
  bool cr = is_completely_regular(s);
  bool group = is_group(s);
  bool cancellative = is_cancellative(s);

  ordered_json j;
  j["order"] = s.order();
  j["associative"] = true;
  j["commutative"] = commutative;
  j["band"] = band;
  j["regular"] = regular;
  j["inverse"] = inverse;
  j["completely_regular"] = cr;
  j["clifford"] = clifford;
  j["group"] = group;
  j["cancellative"] = cancellative;
  j["uniquely_2_divisible"] = squaring.bijective;

  std::cout << "order: " << s.order() << '\n'
            << "associative: yes\n"
            << "commutative: " << yesno(commutative) << '\n'
            << "band: " << yesno(band) << '\n'
            << "regular: " << yesno(regular) << '\n'
            << "inverse: " << yesno(inverse) << '\n'
            << "completely-regular: " << yesno(cr) << '\n'
            << "clifford: " << yesno(clifford) << '\n'
            << "group: " << yesno(group) << '\n'
            << "cancellative: " << yesno(cancellative) << '\n'
            << "uniquely-2-divisible: " << yesno(squaring.bijective) << '\n';

  auto idem = idempotents(s);
  {
    std::vector<int> one_based;
    for (Element e : idem) one_based.push_back(e + 1);
    j["idempotents"] = one_based;
  }
  std::cout << "idempotents: " << join_elements(s, idem) << '\n';

  std::cout << "green-class-sizes: R: "
            << size_list(class_sizes(green.r_classes))
            << " | L: " << size_list(class_sizes(green.l_classes))
            << " | H: " << size_list(class_sizes(green.h_classes))
            << " | D: " << size_list(class_sizes(green.d_classes)) << '\n';
  j["green_class_sizes"] = {{"R", class_sizes(green.r_classes)},
                            {"L", class_sizes(green.l_classes)},
                            {"H", class_sizes(green.h_classes)},
                            {"D", class_sizes(green.d_classes)}};

  if (inverse) {
    NaturalOrder ord = natural_partial_order(s);
    std::string strict;
    auto strict_pairs = ordered_json::array();
    for (auto [b, a] : ord.pairs()) {
      if (b == a) continue;
      if (!strict.empty()) strict += ' ';
      strict += s.label(b) + "<" + s.label(a);
      strict_pairs.push_back({b + 1, a + 1});
    }
    std::cout << "natural-order: " << (strict.empty() ? "trivial" : strict)
              << '\n';
    j["natural_order"] = strict_pairs;
  }

  if (clifford) {
    bool nil = is_nilpotent_clifford(s);
    std::cout << "nilpotent: " << yesno(nil) << '\n';
    j["nilpotent"] = nil;
  }

  if (squaring.bijective) {
    std::vector<int> roots;
    std::string roots_text;
    for (Element x = 0; x < s.order(); ++x) {
      Element r = (*squaring.roots)(x);
      roots.push_back(r + 1);
      if (x) roots_text += ' ';
      roots_text += std::to_string(r + 1);
    }
    std::cout << "square-roots: " << roots_text << '\n';
    j["square_roots"] = roots;
  }

  if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
  return kExitOk;
}

// ---- aut ---------------------------------------------------------------------

int cmd_aut(const std::string& path, const std::string& out_path) {
  FiniteSemigroup s = read_table_file(path);
  bool psi_defined = true;
  try {
    inversion_map(s);
  } catch (const NotInverseOrCompletelyRegularError&) {
    psi_defined = false;
  }

  auto auts = automorphism_group(s);
  std::cout << "automorphisms: " << auts.size() << '\n';
  auto arr = ordered_json::array();
  for (const auto& a : auts) {
    bool fixing = is_idempotent_fixing(s, a);
    ordered_json row;
    row["images"] = emit_automorphism(a);
    row["order"] = a.order;
    row["fixed"] = a.fixed.size();
    row["idempotent_fixing"] = fixing;
    std::cout << "images: " << emit_automorphism(a) << " | order: " << a.order
              << " | fixed: " << a.fixed.size()
              << " | idempotent-fixing: " << yesno(fixing);
    if (psi_defined) {
      bool inj = is_psi_injective(s, a);
      row["psi_injective"] = inj;
      std::cout << " | psi-injective: " << yesno(inj);
    } else {
      row["psi_injective"] = nullptr;
      std::cout << " | psi-injective: -";
    }
    std::cout << '\n';
    arr.push_back(row);
  }
  if (!out_path.empty()) {
    ordered_json j;
    j["order"] = s.order();
    j["automorphisms"] = arr;
    write_file(out_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

// ---- enumerate ------------------------------------------------------------------

int cmd_enumerate(int max_order, const std::string& filter_str, int workers,
                  bool force_large, const std::string& out_path) {
  Filter filter = parse_filter(filter_str);
  if (max_order > default_order_cap(filter) && force_large)
    std::cerr << "warning: order " << max_order
              << " is above the default cap for filter '" << filter_str
              << "'; this may take a long time\n";
  Corpus corpus = enumerate_semigroups(max_order, filter, workers, force_large);
  std::string text = corpus_to_string(corpus);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << corpus.tables.size() << " tables to " << out_path
              << '\n';
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& statements, int max_order,
               const std::string& filter_override, int workers,
               bool force_large, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::map<std::pair<Filter, int>, Corpus> cache;
  auto corpus_for = [&](Filter filter, int order) -> const Corpus& {
    auto key = std::make_pair(filter, order);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    if (filter == Filter::group)
      return cache.emplace(key, group_corpus(order)).first->second;
    if (order > default_order_cap(filter) && force_large)
      std::cerr << "warning: order " << order
                << " is above the default cap for filter '"
                << filter_name(filter) << "'\n";
    return cache
        .emplace(key, enumerate_semigroups(order, filter, workers, force_large))
        .first->second;
  };

  bool theorem_violation = false;
  for (const std::string& stmt : statements) {
    Filter filter = filter_override.empty() ? statement_filter(stmt)
                                            : parse_filter(filter_override);
    int order = max_order > 0 ? max_order
                              : (filter == Filter::group ? 15 : 5);
    const Corpus& corpus = corpus_for(filter, order);
    TheoremReport report = run_statement(corpus, stmt, workers);

    std::string report_path = out_dir + "/" + stmt + ".json";
    write_file(report_path, report_to_json(report));
    std::cout << stmt << ": corpus=" << corpus.tables.size()
              << " checked=" << report.checked
              << " satisfied=" << report.satisfied
              << " violations=" << report.violations.size() << " ["
              << (report.pass() ? "PASS" : "FAIL") << "] -> " << report_path
              << '\n';

    if (report.pass()) continue;
    if (statement_is_theorem(stmt)) {
      theorem_violation = true;
      continue;
    }
    std::cout << "==================== COUNTEREXAMPLE ====================\n"
              << "A hypothesis-satisfying pair violates '" << stmt
              << "'. Replay files:\n";
    for (size_t i = 0; i < report.violations.size(); ++i) {
      std::string path = out_dir + "/" + stmt + "-counterexample-" +
                         std::to_string(i + 1) + ".json";
      write_file(path, record_to_json(report.violations[i]));
      std::cout << "  " << path
                << (replay(report.violations[i]) ? " (replays)"
                                                 : " (REPLAY FAILED)")
                << '\n';
    }
    std::cout << "========================================================\n";
  }
  return theorem_violation ? kExitViolation : kExitOk;
}

// ---- gallery ------------------------------------------------------------------------

int cmd_gallery(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto [b4, inv] = gallery_band_B4();
  std::string table_path = out_dir + "/b4_band.txt";
  write_file(table_path, emit_table(b4));

  TheoremReport report = gallery_checks();
  std::string report_path = out_dir + "/gallery.json";
  write_file(report_path, report_to_json(report));

  std::cout << "band table -> " << table_path << '\n';
  std::cout << "involution: ";
  for (int x = 0; x < b4.order(); ++x) {
    if (x) std::cout << ' ';
    std::cout << x + 1 << "'=" << inv(x) + 1;
  }
  std::cout << '\n';
  std::cout << "gallery: checked=" << report.checked
            << " violations=" << report.violations.size() << " ["
            << (report.pass() ? "PASS" : "FAIL") << "] -> " << report_path
            << '\n';
  return report.pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isemlab: a laboratory for finite semigroup structure,\n"
               "automorphism fixed points, and exhaustive small-order checks"};
  app.require_subcommand(1);

  std::string table_path, out_path;
  std::string out_dir = default_out_dir();
  std::string filter_str = "all", verify_filter;
  int max_order = 4, verify_max_order = 0, workers = 1;
  bool force_large = false;
  std::vector<std::string> statements;

  auto* check = app.add_subcommand("check", "Analyze one Cayley table file");
  check->add_option("table", table_path, "table file")->required();
  check->add_option("--out", out_path, "also write a JSON report");

  auto* aut = app.add_subcommand("aut", "List all automorphisms of a table");
  aut->add_option("table", table_path, "table file")->required();
  aut->add_option("--out", out_path, "also write a JSON report");

  auto* enumerate = app.add_subcommand(
      "enumerate", "Generate all semigroups up to isomorphism");
  enumerate->add_option("--max-order", max_order, "largest order")->required();
  enumerate->add_option("--filter", filter_str,
                        "all|inverse|cr|clifford|band|group|cancellative");
  enumerate->add_option("--workers", workers, "worker threads");
  enumerate->add_flag("--force-large", force_large,
                      "override the default order cap");
  enumerate->add_option("--out", out_path, "corpus file (default: stdout)");

  auto* verify = app.add_subcommand(
      "verify", "Check statements over an exhaustively generated corpus");
  verify->add_option("statements", statements, "statement ids")->required();
  verify->add_option("--max-order", verify_max_order,
                     "largest order (default: 5; groups: 15)");
  verify->add_option("--filter", verify_filter, "override the corpus filter");
  verify->add_option("--workers", workers, "worker threads");
  verify->add_flag("--force-large", force_large,
                   "override the default order cap");
  verify->add_option("--out", out_dir, "report directory");

  auto* gallery = app.add_subcommand(
      "gallery", "Build the involuted band and left-zero-band instances");
  gallery->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(table_path, out_path);
    if (*aut) return cmd_aut(table_path, out_path);
    if (*enumerate)
      return cmd_enumerate(max_order, filter_str, workers, force_large,
                           out_path);
    if (*verify)
      return cmd_verify(statements, verify_max_order, verify_filter, workers,
                        force_large, out_dir);
    if (*gallery) return cmd_gallery(out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
