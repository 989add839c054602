#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "homlab/errors.hpp"
#include "homlab/evaluator.hpp"
#include "homlab/hierarchy.hpp"
#include "homlab/identity.hpp"
#include "homlab/lie_suite.hpp"
#include "homlab/search.hpp"
#include "homlab/structure_io.hpp"

namespace homlab::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string identity;
  std::string type = "plain";
  std::string at;
  bool alpha_id = false;
  bool json = false;
  bool stats = false;
  unsigned workers = 1;
  std::size_t max_n = 0;
  std::uint64_t seed = kDefaultSeed;
};

std::string names(const FiniteHomMagma& m, const std::array<Element, 3>& t) {
  return fmt::format("(x, y, z) = ({}, {}, {})", m.name(t[0]), m.name(t[1]), m.name(t[2]));
}

std::string table_text(const FiniteHomMagma& m) {
  std::string out = fmt::format("{:>4} |", "*");
  for (Element b = 0; b < m.size(); ++b) out += fmt::format(" {:>3}", m.name(b));
  out += fmt::format(" | {:>5}\n", "alpha");
  for (Element a = 0; a < m.size(); ++a) {
    out += fmt::format("{:>4} |", m.name(a));
    for (Element b = 0; b < m.size(); ++b) out += fmt::format(" {:>3}", m.name(m.mul(a, b)));
    out += fmt::format(" | {:>5}\n", m.name(m.alpha(a)));
  }
  return out;
}

std::vector<std::pair<std::string, Identity>> identities_to_check(const Structure& s, const std::string& source) {
  std::vector<std::pair<std::string, Identity>> out;
  if (!source.empty()) {
    out.emplace_back(source, parse_identity(source));
    return out;
  }
  const bool magma = std::holds_alternative<FiniteHomMagma>(s);
  for (auto tag : all_tags()) {
    if (magma && tag.family == Family::Lie) continue;
    if (!magma && tag.family == Family::Lie && std::get<FieldHomAlgebra>(s).kind() != ProductKind::Skew) continue;
    out.emplace_back(to_string(tag), builtin(tag));
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  ojson results = ojson::array();
  bool all = true;
  for (const auto& [label, id] : identities_to_check(s, o.identity)) {
    ojson r{{"identity", label}, {"render", render(id)}};
    std::string witness;
    if (const auto* m = std::get_if<FiniteHomMagma>(&s)) {
      if (auto v = find_violation(*m, id)) {
        witness = names(*m, *v);
        r["witness"] = {m->name((*v)[0]), m->name((*v)[1]), m->name((*v)[2])};
      }
    } else {
      if (auto v = find_violation(std::get<FieldHomAlgebra>(s), id)) {
        witness = fmt::format("(x, y, z) = (e{}, e{}, e{})", (*v)[0] + 1, (*v)[1] + 1, (*v)[2] + 1);
        r["witness"] = {fmt::format("e{}", (*v)[0] + 1), fmt::format("e{}", (*v)[1] + 1),
                        fmt::format("e{}", (*v)[2] + 1)};
      }
    }
    const bool ok = witness.empty();
    all = all && ok;
    r["holds"] = ok;
    results.push_back(r);
    if (!o.json) out << fmt::format("{:<14} {}{}\n", label, ok ? "holds" : "fails at ", witness);
  }
  if (o.json) out << ojson{{"results", results}, {"all_hold", all}}.dump(2) << '\n';
  return all ? kOk : kRefuted;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  const auto p = std::visit([](const auto& x) { return type_profile(x); }, s);
  std::vector<std::string> sat, vio;
  for (auto t : p.satisfied) sat.push_back(to_string(t));
  for (auto t : p.violated()) vio.push_back(to_string(t));
  if (o.json) {
    out << ojson{{"satisfied", sat}, {"violated", vio}}.dump(2) << '\n';
  } else {
    out << fmt::format("satisfied: {}\nviolated:  {}\n", fmt::join(sat, " "), fmt::join(vio, " "));
  }
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  auto spec = search_spec_from_json(read_file(o.file));
  if (o.max_n) spec.max_nonzero = o.max_n;
  const auto v = find_model(spec, {o.workers});
  if (o.json) {
    out << verdict_to_json(spec, v, o.stats) << '\n';
  } else if (v.found()) {
    out << fmt::format("model with {} nonzero elements: {}\n", v.countermodel->nonzero_count(),
                       to_relations(*v.countermodel))
        << table_text(*v.countermodel);
  } else {
    out << fmt::format("no model with at most {} nonzero elements\n", v.exhausted_up_to);
  }
  if (o.stats && !o.json) {
    out << fmt::format("nodes {}, complete assignments {}, {:.3f} s\n", v.stats.nodes, v.stats.models_tested,
                       v.stats.seconds);
  }
  return v.found() ? kRefuted : kOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const auto h = verify_hierarchy(o.max_n ? o.max_n : 3, {o.workers});
  const auto l = run_lie_suite(7, o.seed);
  if (o.json) {
    ojson j;
    j["hierarchy"] = ojson::parse(h.to_json());
    j["lie"] = ojson::parse(l.to_json());
    j["passed"] = h.passed() && l.passed();
    out << j.dump(2) << '\n';
  } else {
    out << "== associative hierarchy ==\n" << h.to_text() << "== Lie suite ==\n" << l.to_text();
    out << (h.passed() && l.passed() ? "all checks pass\n" : "some checks FAIL\n");
  }
  return h.passed() && l.passed() ? kOk : kRefuted;
}

int cmd_lie_verify(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  const auto* a = std::get_if<FieldHomAlgebra>(&s);
  if (!a) throw InvalidSpec("lie-verify needs an algebra file");
  const auto r = lie_verify(*a, o.seed);
  out << (o.json ? r.to_json() + "\n" : r.to_text());
  return r.passed() ? kOk : kRefuted;
}

std::size_t basis_index(const std::string& name, std::size_t dim) {
  if (name.size() < 2 || name[0] != 'e') throw InvalidSpec("basis vectors are named e1, e2, ...");
  std::size_t i = 0;
  try {
    i = std::stoul(name.substr(1));
  } catch (const std::exception&) {
    throw InvalidSpec("bad basis name '" + name + "'");
  }
  if (i < 1 || i > dim) throw IndexOutOfRange(fmt::format("{} is outside dimension {}", name, dim));
  return i - 1;
}

int cmd_jacobiator(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  const auto* src = std::get_if<FieldHomAlgebra>(&s);
  if (!src) throw InvalidSpec("jacobiator needs an algebra file");
  const auto a = o.alpha_id ? src->with_alpha(identity_matrix(src->dim())) : *src;
  if (a.kind() != ProductKind::Skew) throw InvalidSpec("jacobiator needs a skew bracket");
  std::vector<std::string> parts;
  for (std::size_t start = 0; start <= o.at.size();) {
    const auto comma = o.at.find(',', start);
    parts.push_back(o.at.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw InvalidSpec("--at expects three basis names, e.g. e1,e2,e3");
  const auto x = a.basis(basis_index(parts[0], a.dim()));
  const auto y = a.basis(basis_index(parts[1], a.dim()));
  const auto z = a.basis(basis_index(parts[2], a.dim()));
  const Vector v = o.type == "plain" ? jacobi(a, x, y, z) : jacobiator(a, parse_type_tag(o.type, Family::Lie), x, y, z);
  if (o.json) {
    out << ojson{{"type", o.type}, {"at", parts}, {"value", v}}.dump(2) << '\n';
  } else {
    out << fmt::format("({})\n", fmt::join(v, ", "));
  }
  return kOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  ojson ids = ojson::array();
  for (auto tag : all_tags()) ids.push_back({{"tag", to_string(tag)}, {"identity", render(builtin(tag))}});
  ojson fixtures = ojson::array();
  for (const auto& f : builtin_fixtures()) {
    ojson sat = ojson::array(), vio = ojson::array();
    for (auto t : f.claimed_satisfied) sat.push_back(to_string(t));
    for (auto t : f.claimed_violated) vio.push_back(to_string(t));
    ojson fj{{"id", f.id}, {"relations", f.relations}, {"satisfies", sat}, {"violates", vio}};
    if (f.repair) fj["repair"] = *f.repair;
    fj["magma"] = ojson::parse(magma_to_json(from_relations(f.relations)));
    fixtures.push_back(fj);
  }
  ojson algebras;
  algebras["K3-example"] = ojson::parse(algebra_to_json(example_K3(7)));
  algebras["K2-example"] = ojson::parse(algebra_to_json(example_K2(7)));
  algebras["sl2"] = ojson::parse(algebra_to_json(sl2_lie(7)));
  algebras["solvable"] = ojson::parse(algebra_to_json(solvable_lie(7, 3)));
  algebras["heisenberg"] = ojson::parse(algebra_to_json(heisenberg_lie(5)));
  algebras["cyclic-group-algebra"] = ojson::parse(algebra_to_json(cyclic_group_algebra(7)));
  if (o.json) {
    out << ojson{{"identities", ids}, {"fixtures", fixtures}, {"algebras", algebras}}.dump(2) << '\n';
    return kOk;
  }
  for (const auto& i : ids) {
    out << fmt::format("{:<16} {}\n", i["tag"].get<std::string>(), i["identity"].get<std::string>());
  }
  out << '\n';
  for (const auto& f : builtin_fixtures()) out << fmt::format("{:<10} {}\n", f.id, f.relations);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-associative and Hom-Lie type checker and countermodel finder", "homlab"};
  app.require_subcommand(1, 1);
  Options o;

  auto* check = app.add_subcommand("check", "check identities on a magma or algebra file");
  check->add_option("file", o.file, "structure file")->required();
  check->add_option("--identity", o.identity, "identity to check (default: every builtin type)");
  auto* profile = app.add_subcommand("profile", "print the type profile of a structure file");
  profile->add_option("file", o.file, "structure file")->required();
  auto* search = app.add_subcommand("search", "find the least model of a search spec");
  search->add_option("spec", o.file, "search spec file")->required();
  search->add_option("--max-n", o.max_n, "override the bound on nonzero elements");
  search->add_flag("--stats", o.stats, "report search statistics");
  auto* reproduce = app.add_subcommand("reproduce", "run the hierarchy and Lie suites");
  reproduce->add_option("--max-n", o.max_n, "bound on nonzero elements (default 3)");
  auto* lie = app.add_subcommand("lie-verify", "run the bracket checks on an algebra file");
  lie->add_option("file", o.file, "algebra file")->required();
  auto* jac = app.add_subcommand("jacobiator", "evaluate a Jacobiator at basis vectors");
  jac->add_option("file", o.file, "algebra file")->required();
  jac->add_option("--type", o.type, "Lie type tag, or 'plain' for the untwisted Jacobiator");
  jac->add_option("--at", o.at, "three basis names, e.g. e1,e2,e3")->required();
  jac->add_flag("--alpha-id", o.alpha_id, "replace alpha by the identity");
  auto* exp = app.add_subcommand("export", "dump builtin identities, fixtures and example algebras");

  for (auto* sub : {check, profile, search, reproduce, lie, jac, exp}) {
    sub->add_flag("--json", o.json, "machine-readable output");
  }
  for (auto* sub : {search, reproduce}) sub->add_option("--workers", o.workers, "search threads")->check(CLI::Range(1u, 256u));
  for (auto* sub : {reproduce, lie}) sub->add_option("--seed", o.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*profile) return cmd_profile(o, out);
    if (*search) return cmd_search(o, out);
    if (*reproduce) return cmd_reproduce(o, out);
    if (*lie) return cmd_lie_verify(o, out);
    if (*jac) return cmd_jacobiator(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace homlab::cli
