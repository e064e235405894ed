// flatac: construct, verify and enumerate flat maximal antichains.
//
// Exit codes: 0 success, 1 size not constructible, 2 invalid arguments or
// input, 3 verification failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatac/flatac.hpp"

namespace {

using flatac::errc;

enum exit_code : int { ok = 0, not_constructible = 1, bad_args = 2, verify_failed = 3 };

struct Options {
  int n = 0;
  std::int64_t size = 0;
  std::optional<int> level;
  std::string mode = "constructive";
  std::string format = "json";
  std::string out;
  std::string in;
  std::string table_id;
  std::uint64_t seed = 0;  // reserved; every command is deterministic
};

class not_constructible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw flatac::error(errc::bad_family, "cannot write " + opt.out);
  file << text;
}

std::string render(const Options& opt, const flatac::FlatAntichain& a, const flatac::ConstructionTrace* trace) {
  if (opt.format == "text") return flatac::to_text(a);
  return flatac::to_json(a, trace).dump() + "\n";
}

// Explains why m is not produced, using the closed-form predicates.
std::string diagnose(int n, std::int64_t m) {
  std::ostringstream msg;
  msg << "size " << m << " is not constructible for n=" << n;
  const int k = (n + 1) / 2;
  if (m < 1 || m > flatac::binom(n, k)) {
    msg << ": no antichain in B_" << n << " has this size (must lie in [1," << flatac::binom(n, k) << "])";
    return msg.str();
  }
  const flatac::FlatConditions c = flatac::flat_conditions(n, m);
  msg << "; maximal antichain size: " << (flatac::is_mac_size(n, m) ? "yes" : "no")
      << "; flat conditions: main interval " << (c.main_interval ? "yes" : "no") << ", top quadruple form "
      << (c.top_form ? "yes" : "no") << ", levels 1-2 form " << (c.levels12 ? "yes" : "no");
  if (c.top_form && !c.main_interval) msg << " (near-top sizes are recognised but not constructed)";
  return msg.str();
}

std::optional<int> levels12_t(int n, std::int64_t m) {
  for (int t = 2; t <= n; ++t)
    if (flatac::levels12_size(n, t) == m) return t;
  return std::nullopt;
}

int run_construct(const Options& opt) {
  const int n = opt.n;
  const std::int64_t m = opt.size;
  if (n < 2 || n > flatac::max_ground) throw flatac::error(errc::level_range, "--n must lie in [2,64]");
  std::optional<flatac::Construction> built;
  try {
    if (opt.level && *opt.level == 1) {
      const auto t = levels12_t(n, m);
      if (!t) throw not_constructible_error(diagnose(n, m));
      built = flatac::construct_levels12(n, *t);
    } else if (opt.level) {
      built = flatac::construct_in_level(n, *opt.level, m);
    } else if (n >= 6 && flatac::theorem_interval(n).contains(m)) {
      built = flatac::construct_main(n, m);
    } else if (const auto t = levels12_t(n, m)) {
      built = flatac::construct_levels12(n, *t);
    } else {
      std::string msg = diagnose(n, m);
      if (n >= 6) {
        try {
          (void)flatac::plan_main(n, m);
        } catch (const flatac::error& e) {
          if (e.nearest().below) msg += "; nearest constructible below: " + std::to_string(*e.nearest().below);
          if (e.nearest().above) msg += "; nearest constructible above: " + std::to_string(*e.nearest().above);
        }
      }
      throw not_constructible_error(msg);
    }
  } catch (const flatac::error& e) {
    switch (e.code()) {
      case errc::out_of_level_range:
      case errc::out_of_large_range:
      case errc::out_of_small_range:
      case errc::out_of_theorem_range:
        throw not_constructible_error(std::string(e.what()) + "; " + diagnose(n, m));
      default: throw;
    }
  }
  emit(opt, render(opt, built->antichain, &built->trace));
  return ok;
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw flatac::error(errc::bad_family, "cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int run_verify(const Options& opt) {
  const std::string body = slurp(opt.in);
  const auto first = body.find_first_not_of(" \t\r\n");
  flatac::AntichainDocument doc;
  if (first != std::string::npos && body[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw flatac::error(errc::bad_family, std::string("malformed JSON: ") + e.what());
    }
    doc = flatac::document_from_json(j);
  } else {
    std::istringstream in(body);
    doc.antichain = flatac::from_text(in);
  }

  const flatac::VerifyReport rep = flatac::check_maximal_flat(doc.antichain);
  nlohmann::ordered_json out;
  out["is_antichain"] = rep.is_antichain;
  out["is_maximal"] = rep.is_maximal;
  out["size"] = rep.size;
  out["witness"] = rep.witness ? nlohmann::ordered_json(rep.witness->elements()) : nlohmann::ordered_json(nullptr);
  bool trace_ok = true;
  if (doc.trace) {
    try {
      trace_ok = flatac::replay(*doc.trace) == doc.antichain;
    } catch (const flatac::error&) {
      trace_ok = false;
    }
    out["trace_reproduces"] = trace_ok;
  }
  std::cout << out.dump() << "\n";
  return rep.is_maximal && trace_ok ? ok : verify_failed;
}

std::vector<std::int64_t> constructive_sizes(int n, int l) {
  std::vector<std::int64_t> sizes;
  if (l == 1) {
    for (int t = 2; t <= n; ++t) sizes.push_back(flatac::levels12_size(n, t));
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
  }
  const flatac::SizeInterval row = flatac::interval_table_row(n, l);
  std::int64_t lo = row.lo;
  if (const auto gap = flatac::gap_filler_interval(n, l)) lo = std::min(lo, gap->lo);
  for (std::int64_t m = lo; m <= row.hi; ++m)
    if (flatac::level_covers(n, l, m)) sizes.push_back(m);
  return sizes;
}

int run_spectrum(const Options& opt) {
  if (!opt.level) throw flatac::error(errc::level_range, "spectrum needs --level");
  const int n = opt.n;
  const int l = *opt.level;
  std::vector<std::int64_t> sizes;
  if (opt.mode == "exhaustive") {
    sizes = flatac::enumerate_flat_spectrum(n, l).sizes;
  } else {
    // Every listed size is built and certified, not only planned.
    for (std::int64_t m : constructive_sizes(n, l)) {
      const auto a = l == 1 ? flatac::construct_levels12(n, *levels12_t(n, m)) : flatac::construct_in_level(n, l, m);
      if (a.antichain.size() != m) throw flatac::error(errc::verification_failed, "size mismatch");
      sizes.push_back(m);
    }
  }
  std::ostringstream out;
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["levels"] = {l, l + 1};
    j["mode"] = opt.mode;
    j["sizes"] = sizes;
    out << j.dump() << "\n";
  } else if (opt.format == "csv") {
    out << "n,l,size\n";
    for (std::int64_t s : sizes) out << n << ',' << l << ',' << s << '\n';
  } else {
    for (std::int64_t s : sizes) out << s << '\n';
  }
  emit(opt, out.str());
  return ok;
}

// Columns: number of (l+1)-sets, antichain size, and whether the point is a
// squashed antichain or one built by the planner.
int run_plot(const Options& opt) {
  if (!opt.level) throw flatac::error(errc::level_range, "plot needs --level");
  const int n = opt.n;
  const int l = *opt.level;
  if (l < 1 || l + 1 > n || n > flatac::max_ground) throw flatac::error(errc::level_range, "levels outside [1,n]");
  std::ostringstream out;
  out << "t,size,kind\n";
  const std::int64_t top = flatac::binom(n, l + 1);
  for (std::int64_t t = 0; t <= top; ++t) out << t << ',' << flatac::squashed_size(n, l, t) << ",squashed\n";
  if (l >= 2 && 2 * l + 2 <= n) {
    for (std::int64_t m : constructive_sizes(n, l)) {
      const auto c = flatac::construct_in_level(n, l, m);
      out << c.antichain.upper.size() << ',' << m << ",constructed\n";
    }
  }
  emit(opt, out.str());
  return ok;
}

int run_table(const Options& opt) {
  if (opt.table_id != "prop-large-flat") throw flatac::error(errc::level_range, "unknown table id '" + opt.table_id + "'");
  std::ostringstream out;
  for (int n = 8; n <= 14; ++n) {
    out << '$' << n << '$';
    for (int l = 2; l <= 4; ++l) {
      if (2 * l + 2 > n) {
        out << " & --";
        continue;
      }
      const flatac::SizeInterval r = flatac::interval_table_row(n, l);
      out << " & $[" << r.lo << ',' << r.hi << "]$";
    }
    out << " \\\\\n";
  }
  emit(opt, out.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and enumerate flat maximal antichains in the Boolean lattice"};
  app.require_subcommand(1);
  Options opt;

  auto* construct = app.add_subcommand("construct", "Build a maximal flat antichain of a given size");
  construct->add_option("--n", opt.n, "Ground set size")->required();
  construct->add_option("--size", opt.size, "Target size")->required();
  construct->add_option("--level", opt.level, "Lower level l (default: smallest level that works)");
  construct->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  construct->add_option("--out", opt.out, "Write to this file instead of stdout");
  construct->add_option("--seed", opt.seed, "Reserved; output is deterministic");

  auto* verify = app.add_subcommand("verify", "Check an antichain document for maximality");
  verify->add_option("--in", opt.in, "JSON or text document")->required();

  auto* spectrum = app.add_subcommand("spectrum", "List sizes of maximal antichains on levels (l, l+1)");
  spectrum->add_option("--n", opt.n, "Ground set size")->required();
  spectrum->add_option("--level", opt.level, "Lower level l")->required();
  spectrum->add_option("--mode", opt.mode, "constructive or exhaustive")
      ->check(CLI::IsMember({"constructive", "exhaustive"}));
  spectrum->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  spectrum->add_option("--out", opt.out, "Write to this file instead of stdout");
  spectrum->add_option("--seed", opt.seed, "Reserved; output is deterministic");

  auto* plot = app.add_subcommand("plot", "CSV plot data: squashed and constructed antichains");
  plot->add_option("--n", opt.n, "Ground set size")->required();
  plot->add_option("--level", opt.level, "Lower level l")->required();
  plot->add_option("--out", opt.out, "Write to this file instead of stdout");

  auto* table = app.add_subcommand("table", "Print an interval table as LaTeX rows");
  table->add_option("--id", opt.table_id, "Table id (prop-large-flat)")->required();
  table->add_option("--out", opt.out, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : bad_args;
  }

  try {
    if (*construct) return run_construct(opt);
    if (*verify) return run_verify(opt);
    if (*spectrum) return run_spectrum(opt);
    if (*plot) return run_plot(opt);
    if (*table) return run_table(opt);
  } catch (const not_constructible_error& e) {
    std::cerr << "flatac: " << e.what() << "\n";
    return not_constructible;
  } catch (const flatac::error& e) {
    std::cerr << "flatac: " << e.what() << "\n";
    return e.code() == errc::verification_failed ? verify_failed : bad_args;
  }
  return bad_args;
}
