// Command-line front end. Every invocation runs one subcommand and returns
// its exit status: 0 pass (or generated output), 1 failed check, 2 usage
// error, 3 I/O error.

#ifndef GROUPSTAR_CLI_HPP_
#define GROUPSTAR_CLI_HPP_

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groupstar/error.hpp"
#include "groupstar/group.hpp"
#include "groupstar/identities.hpp"
#include "groupstar/io.hpp"
#include "groupstar/representation.hpp"
#include "groupstar/star.hpp"
#include "groupstar/su2.hpp"

namespace groupstar::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct UsageError : Error {
  using Error::Error;
};

enum class Format { Human, Machine };

struct CliConfig {
  std::string command;
  std::string group;
  std::string irrep;
  std::string irrep_b;
  std::string scheme = "primary";
  double tol = 1e-10;
  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::size_t> nodes{8, 8, 8};
  std::string output;
  std::string format = "human";

  std::optional<std::size_t> k_elem;
  std::string k_file;
  std::string kind = "star";
  std::string convention = "output-first";
  std::vector<std::string> checks{"all"};
  std::string matrix_file;
  std::string function_file;
  std::string kernel_file;
  std::vector<double> lambdas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> g1, g2, g3, at;
  std::string f1_file, f2_file;
};

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline std::string num(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string cnum(cplx z) {
  if (std::abs(z.imag()) < 5e-13) return num(z.real());
  if (std::abs(z.real()) < 5e-13) return num(z.imag()) + "i";
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

inline GroupPtr load_group(const std::string& arg) {
  if (const auto b = parse_builtin_group(arg)) return make_group(builtin_group(*b));
  if (!std::filesystem::exists(arg)) throw UsageError("unknown group '" + arg + "': not a builtin name or a file");
  return io::resolve_group(io::load(arg));
}

inline Irrep load_irrep(const GroupPtr& g, const std::string& arg) {
  if (const auto b = parse_builtin_group(g->name())) {
    for (const auto& label : builtin_irrep_labels(*b))
      if (label == arg) return builtin_irrep(g, arg);
  }
  if (!std::filesystem::exists(arg))
    throw UsageError("unknown irrep '" + arg + "' for group " + (g->name().empty() ? "<file>" : g->name()));
  Irrep r = io::irrep_from_json(io::load(arg));
  if (!(*r.group == *g)) throw GroupMismatch("irrep file '" + arg + "' is for a different group");
  r.group = g;
  return r;
}

inline Scheme scheme_of(const std::string& s) {
  const auto p = parse_scheme(s);
  if (!p || *p == Scheme::Custom) throw UsageError("scheme must be primary or dual");
  return *p;
}

inline std::vector<Scheme> schemes_of(const std::string& s) {
  if (s == "both") return {Scheme::Primary, Scheme::Dual};
  return {scheme_of(s)};
}

inline std::optional<Matrix> deformation(const CliConfig& c, const Irrep& r) {
  if (c.k_elem && !c.k_file.empty()) throw UsageError("--k-elem and --k-file are exclusive");
  if (c.k_elem) {
    if (*c.k_elem >= r.matrices.size()) throw UsageError("--k-elem out of range");
    return r.matrices[*c.k_elem];
  }
  if (!c.k_file.empty()) {
    const Matrix k = io::matrix_from_json(io::load(c.k_file).at("matrix"));
    if (k.rows() != r.dim() || k.cols() != r.dim()) throw UsageError("--k-file matrix has the wrong size");
    return k;
  }
  return std::nullopt;
}

inline su2::SU2Element angles(const std::vector<double>& v, const char* what) {
  if (v.size() != 3) throw UsageError(std::string(what) + " needs theta,phi,psi");
  return su2::su2_element(v[0], v[1], v[2]);
}

inline su2::HaarGrid grid_of(const CliConfig& c) {
  if (c.nodes.size() != 3) throw UsageError("--nodes needs three counts");
  return su2::haar_grid(c.nodes[0], c.nodes[1], c.nodes[2]);
}

struct Sink {
  std::ostream& out;
  std::ostream& err;
  Format format;
  std::string output;

  // Documents go to the -o path when given, otherwise to stdout.
  void document(const io::json& doc) const {
    const std::string text = io::dump(doc);
    if (output.empty()) {
      out << text;
      return;
    }
    io::write_file(output, text);
    if (format == Format::Machine)
      out << io::dump(io::json{{"written", output}});
    else
      out << "wrote " << output << "\n";
  }

  int reports(const std::vector<IdentityReport>& rs) const {
    bool all = true;
    for (const auto& r : rs) all = all && r.pass;
    if (format == Format::Machine) {
      io::json arr = io::json::array();
      for (const auto& r : rs) arr.push_back(io::report_to_json(r));
      out << io::dump(io::json{{"reports", arr}, {"pass", all}});
    } else {
      for (const auto& r : rs) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << (r.group.empty() ? "-" : r.group) << "/"
            << (r.irrep.empty() ? "-" : r.irrep);
        if (!r.prefactor.empty()) out << "  [" << r.prefactor << "]";
        out << "  residual=" << sci(r.max_residual) << " tol=" << sci(r.tolerance);
        if (r.alt_prefactor_residual) out << "  alt=" << sci(*r.alt_prefactor_residual);
        if (!r.note.empty()) out << "  " << r.note;
        out << "\n";
      }
    }
    for (const auto& r : rs)
      if (!r.pass) {
        err << "check failed: " << r.name << " (" << r.group << "/" << r.irrep << ", " << r.prefactor
            << ") residual " << sci(r.max_residual) << " > " << sci(r.tolerance) << "\n";
        return kExitCheckFailed;
      }
    return kExitPass;
  }
};

inline IdentityReport make_report(std::string name, std::string group, std::string irrep, double residual,
                                  double tol, std::string note = {}) {
  IdentityReport r;
  r.name = std::move(name);
  r.group = std::move(group);
  r.irrep = std::move(irrep);
  r.max_residual = residual;
  r.tolerance = tol;
  r.note = std::move(note);
  return finish(r);
}

// --- subcommands -----------------------------------------------------------

inline int groups_list(const Sink& s) {
  if (s.format == Format::Machine) {
    io::json arr = io::json::array();
    for (auto b : kBuiltinGroups)
      arr.push_back({{"name", to_string(b)}, {"order", builtin_group(b).order()}, {"irreps", builtin_irrep_labels(b)}});
    s.out << io::dump(arr);
    return kExitPass;
  }
  for (auto b : kBuiltinGroups) {
    s.out << to_string(b) << "  order " << builtin_group(b).order() << "  irreps:";
    for (const auto& l : builtin_irrep_labels(b)) s.out << " " << l;
    s.out << "\n";
  }
  return kExitPass;
}

inline int groups_show(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  if (s.format == Format::Machine) {
    io::json j = io::group_to_json(*g);
    io::json cls = io::json::array();
    for (const auto& cl : g->classes()) cls.push_back(cl);
    j["classes"] = cls;
    s.out << io::dump(j);
    return kExitPass;
  }
  const auto& names = g->names();
  std::size_t w = 1;
  for (const auto& n : names) w = std::max(w, n.size());
  auto pad = [&](const std::string& x) { return x + std::string(w + 1 - x.size(), ' '); };
  s.out << (g->name().empty() ? "group" : g->name()) << " (order " << g->order() << ")\n";
  s.out << pad("") << "| ";
  for (const auto& n : names) s.out << pad(n);
  s.out << "\n";
  for (Element a = 0; a < g->order(); ++a) {
    s.out << pad(names[a]) << "| ";
    for (Element b = 0; b < g->order(); ++b) s.out << pad(names[g->multiply(a, b)]);
    s.out << "\n";
  }
  s.out << "classes:";
  for (const auto& cl : g->classes()) {
    s.out << " {";
    for (std::size_t i = 0; i < cl.size(); ++i) s.out << (i ? "," : "") << names[cl[i]];
    s.out << "}";
  }
  s.out << "\n";
  return kExitPass;
}

inline int character_table_cmd(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  const CharacterTable t = character_table(g, builtin_irreps(g), c.tol);
  if (s.format == Format::Machine) {
    io::json rows = io::json::array();
    for (const auto& r : t.rows) rows.push_back(io::function_to_json(r)["values"]);
    io::json cls = io::json::array();
    for (const auto& cl : g->classes()) cls.push_back(cl);
    s.out << io::dump(io::json{{"group", g->name()},
                               {"elements", g->names()},
                               {"classes", cls},
                               {"irreps", t.labels},
                               {"characters", rows}});
    return kExitPass;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (const auto& n : g->names()) cells.back().push_back(n);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    cells.push_back({t.labels[r]});
    for (std::size_t k = 0; k < g->order(); ++k) cells.back().push_back(cnum(t.rows[r][k]));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i)
      s.out << row[i] << std::string(width[i] - row[i].size() + 2, ' ');
    s.out << "\n";
  }
  return kExitPass;
}

inline StarKernel build_kernel(const CliConfig& c, const Irrep& r, Scheme scheme) {
  const QuantizerPair p = quantizer_pair(r, scheme, c.tol);
  const auto k = deformation(c, r);
  StarKernel K = k ? k_deformed_kernel(p, *k) : star_kernel(p);
  const auto kind = parse_kernel_kind(c.kind);
  if (!kind) throw UsageError("--kind must be star, lie or jordan");
  if (*kind == KernelKind::Lie) K = lie_kernel(K);
  if (*kind == KernelKind::Jordan) K = jordan_kernel(K);
  return K;
}

inline int kernel_cmd(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  const Irrep r = load_irrep(g, c.irrep);
  const StarKernel K = build_kernel(c, r, scheme_of(c.scheme));
  s.document(io::kernel_to_json(K, c.convention == "output-last"));
  return kExitPass;
}

inline int symbol_cmd(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  const QuantizerPair p = quantizer_pair(load_irrep(g, c.irrep), scheme_of(c.scheme), c.tol);
  const Matrix A = io::matrix_from_json(io::load(c.matrix_file).at("matrix"));
  s.document(io::function_to_json(symbol(p, A)));
  return kExitPass;
}

inline int reconstruct_cmd(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  const QuantizerPair p = quantizer_pair(load_irrep(g, c.irrep), scheme_of(c.scheme), c.tol);
  const GroupFunction f = io::function_from_json(io::load(c.function_file));
  s.document(io::json{{"matrix", io::to_json(reconstruct(p, f))}});
  return kExitPass;
}

inline const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"roundtrip", "closure", "assoc", "eq24", "eq25", "eq27", "weyl"};
  return names;
}

inline std::vector<std::string> expand_checks(const std::vector<std::string>& requested,
                                              const std::vector<std::string>& known) {
  std::vector<std::string> out;
  for (const auto& name : requested) {
    if (name == "all") return known;
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UsageError("unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

inline bool wants(const std::vector<std::string>& checks, const std::string& name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end();
}

inline int verify_cmd(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  const Irrep r = load_irrep(g, c.irrep);
  const auto checks = expand_checks(c.checks, verify_check_names());
  const auto k = deformation(c, r);
  std::vector<IdentityReport> out;
  for (Scheme scheme : schemes_of(c.scheme)) {
    const QuantizerPair p = quantizer_pair(r, scheme, c.tol);
    if (wants(checks, "roundtrip")) out.push_back(verify_roundtrip(p, c.trials, c.seed, c.tol));
    if (wants(checks, "closure")) out.push_back(verify_closure(p, c.trials, c.seed, c.tol, k));
    if (wants(checks, "assoc")) {
      IdentityReport rep =
          verify_associativity(k ? k_deformed_kernel(p, *k) : star_kernel(p), c.trials, c.seed, c.tol);
      rep.prefactor = to_string(scheme);
      out.push_back(rep);
    }
  }
  const std::pair<const char*, CharacterIdentity> ids[] = {{"eq24", CharacterIdentity::Eq24},
                                                           {"eq25", CharacterIdentity::Eq25},
                                                           {"eq27", CharacterIdentity::Eq27},
                                                           {"weyl", CharacterIdentity::Weyl}};
  for (const auto& [name, which] : ids)
    if (wants(checks, name)) out.push_back(verify_character_identity(r, which, c.tol));
  return s.reports(out);
}

// A kernel operand of `compat`: an irrep label or file, or one of the
// reference kernels "pointwise" and "convolution".
inline StarKernel compat_operand(const CliConfig& c, const GroupPtr& g, const std::string& arg) {
  if (arg == "pointwise") return reference_kernels(g).pointwise;
  if (arg == "convolution") return reference_kernels(g).convolution;
  return star_kernel(quantizer_pair(load_irrep(g, arg), scheme_of(c.scheme), c.tol));
}

inline int compat_cmd(const Sink& s, const CliConfig& c) {
  const GroupPtr g = load_group(c.group);
  const StarKernel K1 = compat_operand(c, g, c.irrep);
  const StarKernel K2 = compat_operand(c, g, c.irrep_b);
  std::vector<IdentityReport> out;
  for (const auto& e : check_compatibility(K1, K2, c.lambdas, c.trials, c.seed, c.tol)) {
    IdentityReport rep = e.report;
    rep.irrep = c.irrep + "+" + c.irrep_b;
    char buf[40];
    std::snprintf(buf, sizeof buf, "lambda=%.17g", e.lambda);
    rep.note = buf;
    out.push_back(rep);
  }
  return s.reports(out);
}

inline int verify_kernel_cmd(const Sink& s, const CliConfig& c) {
  const StarKernel K = io::kernel_from_json(io::load(c.kernel_file));
  const std::string gname = K.group ? K.group->name() : std::string();
  std::vector<IdentityReport> out;
  switch (K.kind) {
    case KernelKind::Star: out.push_back(verify_associativity(K, c.trials, c.seed, c.tol)); break;
    case KernelKind::Lie:
      out.push_back(make_report("antisymmetry", gname, K.irrep_label, swap_symmetry_residual(K, -1.0), c.tol));
      out.push_back(verify_jacobi(K, c.trials, c.seed, c.tol));
      break;
    case KernelKind::Jordan:
      out.push_back(make_report("symmetry", gname, K.irrep_label, swap_symmetry_residual(K, 1.0), c.tol));
      out.push_back(verify_jordan_identity(K, c.trials, c.seed, c.tol));
      break;
  }
  // Kernels of builtin irreps are also compared against a fresh construction.
  const bool regenerable = K.group && parse_builtin_group(K.group->name()) && !K.deformed &&
                           (K.scheme == KernelScheme::Primary || K.scheme == KernelScheme::Dual);
  if (regenerable) {
    const auto labels = builtin_irrep_labels(*parse_builtin_group(K.group->name()));
    if (std::find(labels.begin(), labels.end(), K.irrep_label) != labels.end()) {
      const Scheme scheme = K.scheme == KernelScheme::Primary ? Scheme::Primary : Scheme::Dual;
      StarKernel ref = star_kernel(quantizer_pair(builtin_irrep(K.group, K.irrep_label), scheme));
      if (K.kind == KernelKind::Lie) ref = lie_kernel(ref);
      if (K.kind == KernelKind::Jordan) ref = jordan_kernel(ref);
      out.push_back(make_report("matches_builtin", gname, K.irrep_label, max_abs_diff(K.tensor, ref.tensor), c.tol,
                                to_string(K.scheme)));
    }
  }
  for (auto& r : out)
    if (r.prefactor.empty()) r.prefactor = to_string(K.scheme) + "/" + to_string(K.kind);
  return s.reports(out);
}

// --- su2 -------------------------------------------------------------------

inline su2::KernelForm form_of(const std::string& kind) {
  if (kind == "star") return su2::KernelForm::Star;
  if (kind == "lie") return su2::KernelForm::Lie;
  throw UsageError("SU(2) kernels support --kind star or lie");
}

inline int su2_value(const Sink& s, cplx v, const CliConfig& c) {
  if (s.format == Format::Machine)
    s.out << io::dump(io::json{{"scheme", c.scheme}, {"kind", c.kind}, {"value", io::to_json(v)}});
  else
    s.out << cnum(v) << "\n";
  return kExitPass;
}

inline int su2_kernel_cmd(const Sink& s, const CliConfig& c) {
  const auto g1 = angles(c.g1, "--g1");
  const auto g2 = angles(c.g2, "--g2");
  const auto g3 = angles(c.g3, "--g3");
  const Scheme scheme = scheme_of(c.scheme);
  const cplx v = form_of(c.kind) == su2::KernelForm::Lie ? su2::su2_lie_kernel(g1, g2, g3, scheme)
                                                         : su2::su2_kernel(g1, g2, g3, scheme);
  return su2_value(s, v, c);
}

inline int su2_sample_cmd(const Sink& s, const CliConfig& c) {
  const su2::HaarGrid grid = grid_of(c);
  const Matrix A = io::matrix_from_json(io::load(c.matrix_file).at("matrix"));
  s.document(io::samples_to_json(grid, su2::sample_symbol(grid, A, scheme_of(c.scheme))));
  return kExitPass;
}

inline int su2_star_cmd(const Sink& s, const CliConfig& c) {
  const io::json j1 = io::load(c.f1_file);
  const su2::HaarGrid grid = io::grid_from_samples(j1);
  const auto f1 = io::samples_from_json(j1, grid);
  const auto f2 = io::samples_from_json(io::load(c.f2_file), grid);
  const cplx v = su2::su2_star(f1, f2, angles(c.at, "--at"), grid, scheme_of(c.scheme), form_of(c.kind));
  return su2_value(s, v, c);
}

inline const std::vector<std::string>& su2_check_names() {
  static const std::vector<std::string> names{"volume", "orthogonality", "closure", "lie-expansion"};
  return names;
}

inline int su2_verify_cmd(const Sink& s, const CliConfig& c) {
  const auto checks = expand_checks(c.checks, su2_check_names());
  const su2::HaarGrid grid = grid_of(c);
  std::vector<IdentityReport> out;
  if (wants(checks, "volume")) out.push_back(make_report("volume", "SU2", "spin1/2", su2::volume_residual(grid), c.tol));
  if (wants(checks, "orthogonality"))
    out.push_back(make_report("orthogonality", "SU2", "spin1/2", su2::orthogonality_residual(grid), c.tol));
  if (wants(checks, "closure")) {
    for (Scheme scheme : schemes_of(c.scheme)) {
      RandomSource rng(c.seed);
      double worst = 0.0;
      for (int t = 0; t < c.trials; ++t) {
        const Matrix A = rng.matrix(2);
        const Matrix B = rng.matrix(2);
        const su2::SU2Element g = su2::random_element(rng);
        const cplx got = su2::su2_star(su2::sample_symbol(grid, A, scheme), su2::sample_symbol(grid, B, scheme), g,
                                       grid, scheme);
        worst = std::max(worst, std::abs(got - su2::su2_symbol(A * B, g, scheme)));
      }
      IdentityReport rep = make_report("closure", "SU2", "spin1/2", worst, c.tol);
      rep.prefactor = to_string(scheme);
      out.push_back(rep);
    }
  }
  if (wants(checks, "lie-expansion")) {
    RandomSource rng(c.seed);
    double worst = 0.0, alt = 0.0;
    for (int t = 0; t < c.trials; ++t) {
      const auto a = su2::random_element(rng);
      const auto b = su2::random_element(rng);
      const auto x = su2::random_element(rng);
      const cplx lie = su2::su2_lie_kernel(a, b, x, Scheme::Dual);
      worst = std::max(worst, std::abs(lie - su2::su2_dual_lie_expansion(a, b, x)));
      alt = std::max(alt, std::abs(lie - su2::su2_dual_lie_expansion_alt(a, b, x)));
    }
    IdentityReport rep = make_report("lie-expansion", "SU2", "spin1/2", worst, c.tol,
                                     "alt = residual with the exchanged beta3 signs");
    rep.prefactor = "dual";
    rep.alt_prefactor_residual = alt;
    out.push_back(rep);
  }
  return s.reports(out);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Star products on finite groups and SU(2)", "groupstar"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--tol", c.tol, "tolerance")->check(CLI::PositiveNumber);
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--trials", c.trials, "random trials")->check(CLI::Range(1, 1000000));
    sub->add_option("--seed", c.seed, "random seed");
  };
  auto group_irrep = [&](CLI::App* sub) {
    sub->add_option("group", c.group, "builtin group name or group file")->required();
    sub->add_option("irrep", c.irrep, "irrep label or irrep file")->required();
  };
  auto scheme_opt = [&](CLI::App* sub, bool allow_both) {
    std::vector<std::string> allowed{"primary", "dual"};
    if (allow_both) allowed.push_back("both");
    sub->add_option("--scheme", c.scheme, "quantizer scheme")->check(CLI::IsMember(allowed));
  };
  auto deform_opts = [&](CLI::App* sub) {
    auto* ke = sub->add_option("--k-elem", c.k_elem, "deform with the image of element <index>");
    auto* kf = sub->add_option("--k-file", c.k_file, "deform with a matrix file");
    ke->excludes(kf);
  };
  auto output_opt = [&](CLI::App* sub) { sub->add_option("-o,--output", c.output, "output path"); };

  auto* groups = app.add_subcommand("groups", "builtin groups");
  groups->require_subcommand(1);
  auto* groups_list = groups->add_subcommand("list", "list builtin groups");
  common(groups_list);
  auto* groups_show = groups->add_subcommand("show", "print a Cayley table");
  groups_show->add_option("group", c.group, "builtin group name or group file")->required();
  common(groups_show);

  auto* ctable = app.add_subcommand("character-table", "character table of a builtin group");
  ctable->add_option("group", c.group, "builtin group name")->required();
  common(ctable);

  auto* kernel = app.add_subcommand("kernel", "build a star-product kernel");
  group_irrep(kernel);
  scheme_opt(kernel, false);
  deform_opts(kernel);
  kernel->add_option("--kind", c.kind, "star, lie or jordan")->check(CLI::IsMember({"star", "lie", "jordan"}));
  kernel->add_option("--convention", c.convention, "index order of the written tensor")
      ->check(CLI::IsMember({"output-first", "output-last"}));
  output_opt(kernel);
  common(kernel);

  auto* sym = app.add_subcommand("symbol", "symbol of an operator");
  group_irrep(sym);
  scheme_opt(sym, false);
  sym->add_option("--matrix", c.matrix_file, "matrix file")->required();
  output_opt(sym);
  common(sym);

  auto* rec = app.add_subcommand("reconstruct", "operator from a symbol");
  group_irrep(rec);
  scheme_opt(rec, false);
  rec->add_option("--function", c.function_file, "function file")->required();
  output_opt(rec);
  common(rec);

  auto* verify = app.add_subcommand("verify", "run identity checks");
  group_irrep(verify);
  scheme_opt(verify, true);
  deform_opts(verify);
  verify->add_option("--check", c.checks, "roundtrip|closure|assoc|eq24|eq25|eq27|weyl|all");
  sampling(verify);
  common(verify);

  auto* compat = app.add_subcommand("compat", "associativity of K1 + lambda K2");
  compat->add_option("group", c.group, "builtin group name or group file")->required();
  compat->add_option("first", c.irrep, "irrep, pointwise or convolution")->required();
  compat->add_option("second", c.irrep_b, "irrep, pointwise or convolution")->required();
  scheme_opt(compat, false);
  compat->add_option("--lambdas", c.lambdas, "mixing weights")->delimiter(',');
  sampling(compat);
  common(compat);

  auto* vk = app.add_subcommand("verify-kernel", "check a kernel file");
  vk->add_option("file", c.kernel_file, "kernel file")->required();
  sampling(vk);
  common(vk);

  auto* su2cmd = app.add_subcommand("su2", "SU(2) at spin 1/2");
  su2cmd->require_subcommand(1);
  auto nodes_opt = [&](CLI::App* sub) {
    sub->add_option("--nodes", c.nodes, "theta,phi,psi node counts")->delimiter(',')->expected(3);
  };
  auto* su2_kernel = su2cmd->add_subcommand("kernel", "kernel value K(g1, g2, g3)");
  su2_kernel->add_option("--g1", c.g1, "theta,phi,psi")->delimiter(',')->required();
  su2_kernel->add_option("--g2", c.g2, "theta,phi,psi")->delimiter(',')->required();
  su2_kernel->add_option("--g3", c.g3, "theta,phi,psi (output)")->delimiter(',')->required();
  su2_kernel->add_option("--kind", c.kind, "star or lie")->check(CLI::IsMember({"star", "lie"}));
  scheme_opt(su2_kernel, false);
  common(su2_kernel);
  auto* su2_sample = su2cmd->add_subcommand("sample", "sample the symbol of a 2x2 matrix");
  su2_sample->add_option("--matrix", c.matrix_file, "matrix file")->required();
  scheme_opt(su2_sample, false);
  nodes_opt(su2_sample);
  output_opt(su2_sample);
  common(su2_sample);
  auto* su2_star = su2cmd->add_subcommand("star", "star product of two sampled symbols at one point");
  su2_star->add_option("--f1", c.f1_file, "left sampled function")->required();
  su2_star->add_option("--f2", c.f2_file, "right sampled function")->required();
  su2_star->add_option("--at", c.at, "theta,phi,psi")->delimiter(',')->required();
  su2_star->add_option("--kind", c.kind, "star or lie")->check(CLI::IsMember({"star", "lie"}));
  scheme_opt(su2_star, false);
  common(su2_star);
  auto* su2_verify = su2cmd->add_subcommand("verify", "quadrature and kernel checks");
  su2_verify->add_option("--check", c.checks, "volume|orthogonality|closure|lie-expansion|all");
  su2_verify->add_option("--scheme", c.scheme, "primary, dual or both")
      ->check(CLI::IsMember({"primary", "dual", "both"}));
  nodes_opt(su2_verify);
  sampling(su2_verify);
  common(su2_verify);

  // The default scheme depends on the subcommand; reset it before parsing.
  c.scheme = "";
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (c.scheme.empty()) c.scheme = (verify->parsed() || su2_verify->parsed()) ? "both" : "primary";

  detail::Sink sink{out, err, c.format == "machine" ? Format::Machine : Format::Human, c.output};
  try {
    if (groups_list->parsed()) return detail::groups_list(sink);
    if (groups_show->parsed()) return detail::groups_show(sink, c);
    if (ctable->parsed()) return detail::character_table_cmd(sink, c);
    if (kernel->parsed()) return detail::kernel_cmd(sink, c);
    if (sym->parsed()) return detail::symbol_cmd(sink, c);
    if (rec->parsed()) return detail::reconstruct_cmd(sink, c);
    if (verify->parsed()) return detail::verify_cmd(sink, c);
    if (compat->parsed()) return detail::compat_cmd(sink, c);
    if (vk->parsed()) return detail::verify_kernel_cmd(sink, c);
    if (su2_kernel->parsed()) return detail::su2_kernel_cmd(sink, c);
    if (su2_sample->parsed()) return detail::su2_sample_cmd(sink, c);
    if (su2_star->parsed()) return detail::su2_star_cmd(sink, c);
    if (su2_verify->parsed()) return detail::su2_verify_cmd(sink, c);
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GridMismatch& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no command\n";
  return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"groupstar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace groupstar::cli

#endif  // GROUPSTAR_CLI_HPP_
