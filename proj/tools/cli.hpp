#ifndef WEDKIT_TOOLS_CLI_HPP
#define WEDKIT_TOOLS_CLI_HPP

#include <wedkit/json_io.hpp>
#include <wedkit/wedkit.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace wedkit::cli {

using json::Json;

namespace detail {

inline Json block_json(const SimpleBlock& b) {
  Json j{{"block_dim", b.block_dim}, {"center_dim", b.center_dim}};
  j["matrix_size"] = b.matrix_size ? Json(*b.matrix_size) : Json("unsplit");
  j["split"] = b.matrix_size.has_value();
  j["central_idempotent"] = json::to_json(b.central_idempotent);
  return j;
}

inline Json semisimple_json(const SemisimpleReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(block_json(b));
  return Json{{"total_dim", r.total_dim}, {"all_split", r.all_split()}, {"blocks", blocks}};
}

inline Json vectors_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(json::to_json(v));
  return a;
}

inline Json radical_cmd(const Algebra& a) {
  const Subspace r = radical(a);
  return Json{{"dim", a.dim()},
              {"radical_dim", r.dim()},
              {"nilpotency_index", nilpotency_index(a, r)},
              {"basis", vectors_json(r.basis())}};
}

inline Json decompose_cmd(const Algebra& a) {
  const Subspace r = radical(a);
  const Quotient q = quotient(a, r);
  Json j{{"dim", a.dim()}, {"radical_dim", r.dim()}, {"quotient_dim", q.algebra.dim()}};
  j["semisimple"] = semisimple_json(semisimple_decompose(q.algebra));
  return j;
}

inline Json check_cmd(const Algebra& a) {
  const WedderburnReport w = is_wedderburn(a);
  return Json{{"wedderburn", w.wedderburn},
              {"dim", w.dim},
              {"radical_dim", w.radical_dim},
              {"radical_index", w.radical_index},
              {"quotient_dim", w.quotient_dim},
              {"trace_form_nondegenerate", w.trace_form_nondegenerate},
              {"quotient", semisimple_json(w.quotient)}};
}

inline Json split_cmd(const Algebra& a) {
  const RadicalData rd = radical_data(a);
  const Section s = lift_section_from(a, rd, canonical_linear_section(a, rd.quotient));
  const SectionCheck c = verify_section(a, rd.quotient, s.map);
  Json reps = Json::array();
  for (auto r : rd.quotient.representatives) reps.push_back(r);
  return Json{{"dim", a.dim()},
              {"quotient_dim", s.quotient_dim()},
              {"quotient_representatives", reps},
              {"section", json::to_json(s.map)},
              {"verification", {{"projection", c.projection}, {"multiplicative", c.multiplicative}, {"unital", c.unital}}}};
}

inline Json conjugate_cmd(const Algebra& a, const Matrix& m1, const Matrix& m2) {
  const RadicalData rd = radical_data(a);
  const Section s1{m1, rd.quotient.projection, rd.quotient.algebra};
  const Section s2{m2, rd.quotient.projection, rd.quotient.algebra};
  const Vector u = conjugate_sections(a, s1, s2);
  return Json{{"u", json::to_json(u)}, {"verified", true}};
}

inline Json envelope_cmd(const Quiver& q) {
  const EnvelopeReport e = envelope(q);
  Json blocks = Json::array();
  for (const auto& [size, mult] : e.blocks) blocks.push_back(Json{{"size", size}, {"mult", mult}});
  return Json{{"type", e.type.name()}, {"blocks", blocks}};
}

inline Json roots_cmd(const std::string& type) {
  Json out = Json::array();
  for (const auto& r : positive_roots(parse_dynkin_type(type)).positive_roots) out.push_back(r);
  return out;
}

inline TensorMorphism tensor_morphism_from(const Json& doc, const std::string& perm) {
  TensorMorphism tm;
  tm.factors = json::matrices_from_json(doc);
  if (tm.factors.empty()) throw InputError("no matrices given");
  tm.perm = Permutation::parse_cycles(perm, tm.factors.size());
  if (doc.is_object() && doc.contains("grading")) {
    std::vector<GradedObject> objs;
    for (const auto& g : doc.at("grading")) objs.push_back({json::count_from_json(g, "even"), json::count_from_json(g, "odd")});
    tm.objects = std::move(objs);
  }
  return tm;
}

inline Json trace_cmd(const Json& doc, const std::string& perm) {
  const TensorMorphism tm = tensor_morphism_from(doc, perm);
  const Rational cycle = twisted_trace(tm);
  const Rational brute = twisted_trace_kronecker(tm);
  if (cycle != brute) throw InternalError("cycle formula disagrees with the Kronecker trace");
  Json cycles = Json::array();
  for (const auto& c : tm.perm.cycles()) cycles.push_back(c);
  return Json{{"perm", tm.perm.to_string()}, {"cycles", cycles}, {"trace", json::to_json(cycle)}, {"graded", tm.objects.has_value()}};
}

inline Json lambda_cmd(const Matrix& f, std::size_t n) {
  if (f.rows() != f.cols()) throw InputError("expected a square matrix");
  check_symmetric_degree(n);
  std::vector<Rational> power_traces;
  Matrix p = Matrix::identity(f.rows());
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * f;
    power_traces.push_back(trace(p));
  }
  Json pt = Json::array(), el = Json::array();
  for (const auto& t : power_traces) pt.push_back(json::to_json(t));
  for (const auto& e : power_to_elementary(power_traces)) el.push_back(json::to_json(e));
  return Json{{"n", n},
              {"lambda_trace", json::to_json(lambda_trace(f, n))},
              {"sym_trace", json::to_json(sym_trace(f, n))},
              {"power_traces", pt},
              {"elementary", el}};
}

inline Json kimura_cmd(std::size_t p, std::size_t q) {
  const KimuraReport k = kimura_dim({p, q});
  return Json{{"kim", k.kim}, {"super_dim", k.super_dim}, {"first_vanishing", k.first_vanishing}};
}

inline Json nagata_cmd(const std::vector<Matrix>& gens, std::size_t n) {
  const NagataHigmanReport r = nagata_higman_check(gens, n);
  return Json{{"exponent", r.exponent},
              {"bound", r.bound},
              {"algebra_dim", r.algebra_dim},
              {"vanishing_length", r.vanishing_length},
              {"bound_holds", r.bound_holds}};
}

inline Json ga_hom_cmd(std::size_t m, std::size_t n) {
  Json p = clebsch_gordan(m, n);
  return Json{{"m", m},
              {"n", n},
              {"hom_dim", hom_dim(m, n)},
              {"P", p},
              {"intertwiner_dim", intertwiners(GaRep::sym(m), GaRep::sym(n)).size()}};
}

inline Json ga_cg_cmd(std::size_t m, std::size_t n) {
  Json jt = jordan_type(tensor(GaRep::sym(m), GaRep::sym(n)));
  return Json{{"m", m}, {"n", n}, {"decomposition", clebsch_gordan(m, n)}, {"jordan_type", jt}};
}

inline Json ga_sl2_cmd(std::size_t m_max) {
  const Sl2Report r = sl2_consistency(m_max);
  return Json{{"m_max", r.m_max},
              {"consistent", r.ok()},
              {"dims_match", r.dims_match},
              {"clebsch_gordan_match", r.clebsch_gordan_match},
              {"pairs_checked", r.pairs_checked},
              {"radical_equals_numerically_trivial", r.radical_equals_numerically_trivial},
              {"endomorphism_dim", r.endomorphism_dim},
              {"radical_dim", r.radical_dim}};
}

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

/// Indented key/value listing; arrays of scalars stay on one line.
inline void pretty(std::ostream& out, const Json& j, int indent, const std::string& label) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto all_scalar = [](const Json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    if (!label.empty()) out << pad << label << ":\n";
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && all_scalar(v))) {
        pretty(out, v, indent + (label.empty() ? 0 : 2), k);
      } else {
        out << pad << (label.empty() ? "" : "  ") << std::left << std::setw(static_cast<int>(width)) << k << "  ";
        if (v.is_array()) {
          for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << scalar_text(v[i]);
        } else {
          out << scalar_text(v);
        }
        out << '\n';
      }
    }
  } else if (j.is_array()) {
    if (!label.empty()) out << pad << label << ":\n";
    std::size_t i = 0;
    for (const auto& v : j) {
      if (v.is_array() && all_scalar(v)) {
        out << pad << "  ";
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << scalar_text(v[k]);
        out << '\n';
      } else if (v.is_structured()) {
        pretty(out, v, indent + 2, "[" + std::to_string(i) + "]");
      } else {
        out << pad << "  " << scalar_text(v) << '\n';
      }
      ++i;
    }
  } else {
    out << pad << (label.empty() ? "" : label + "  ") << scalar_text(j) << '\n';
  }
}

}  // namespace detail

/// Runs the command line; returns the process exit code. 0: success with
/// one JSON document on `out`; 2: usage or input error; 1: internal error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"wedkit: exact computations with finite-dimensional algebras, quivers and monoidal traces"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::function<Json()> action;
  std::string input, s1, s2, type, perm = "()", mats, mat;
  std::size_t n = 0, m = 0, p = 0, q = 0, m_max = 0;

  auto alg_verb = [&](const char* name, const char* help, Json (*fn)(const Algebra&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", input, "Algebra JSON file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(json::algebra_from_json(json::read_file(input))); }; });
  };
  alg_verb("radical", "Radical of an algebra", detail::radical_cmd);
  alg_verb("decompose", "Semisimple decomposition of A/rad(A)", detail::decompose_cmd);
  alg_verb("check", "Wedderburn test report", detail::check_cmd);
  alg_verb("split", "Multiplicative section of A -> A/rad(A)", detail::split_cmd);

  auto* conj = app.add_subcommand("conjugate", "Conjugating unit between two sections");
  conj->add_option("-i,--input", input, "Algebra JSON file")->required();
  conj->add_option("--s1", s1, "First section matrix JSON")->required();
  conj->add_option("--s2", s2, "Second section matrix JSON")->required();
  conj->callback([&] {
    action = [&] {
      return detail::conjugate_cmd(json::algebra_from_json(json::read_file(input)),
                                   json::matrix_from_json(json::read_file(s1)),
                                   json::matrix_from_json(json::read_file(s2)));
    };
  });

  auto* env = app.add_subcommand("envelope", "Semisimple envelope of a representation-finite path algebra");
  env->add_option("-i,--input", input, "Quiver JSON file")->required();
  env->callback([&] { action = [&] { return detail::envelope_cmd(json::quiver_from_json(json::read_file(input))); }; });

  auto* roots = app.add_subcommand("roots", "Positive roots of an ADE root system");
  roots->add_option("--type", type, "Dynkin type, e.g. A4, D5, E6")->required();
  roots->callback([&] { action = [&] { return detail::roots_cmd(type); }; });

  auto* tr = app.add_subcommand("trace", "Twisted trace of sigma^{-1} o (f_0 (x) ... (x) f_{n-1})");
  tr->add_option("--perm", perm, "Permutation in 0-based cycle notation");
  tr->add_option("--mats", mats, "JSON list of matrices, or {\"matrices\":[...],\"grading\":[...]}")->required();
  tr->callback([&] { action = [&] { return detail::trace_cmd(json::read_file(mats), perm); }; });

  auto* lam = app.add_subcommand("lambda", "Trace of the n-th exterior power");
  lam->add_option("--mat", mat, "Matrix JSON file")->required();
  lam->add_option("-n", n, "Degree")->required();
  lam->callback([&] { action = [&] { return detail::lambda_cmd(json::matrix_from_json(json::read_file(mat)), n); }; });

  auto* kim = app.add_subcommand("kimura", "Kimura dimension of a graded object");
  kim->add_option("-p", p, "Even dimension")->required();
  kim->add_option("-q", q, "Odd dimension")->required();
  kim->callback([&] { action = [&] { return detail::kimura_cmd(p, q); }; });

  auto* nag = app.add_subcommand("nagata", "Nagata-Higman check for a nil algebra of matrices");
  nag->add_option("--mats", mats, "JSON list of generator matrices")->required();
  nag->add_option("-n", n, "Nil exponent")->required();
  nag->callback([&] { action = [&] { return detail::nagata_cmd(json::matrices_from_json(json::read_file(mats)), n); }; });

  auto* hom = app.add_subcommand("ga-hom", "Hom(S^m V, S^n V) for the additive group");
  hom->add_option("-m", m, "Source index")->required();
  hom->add_option("-n", n, "Target index")->required();
  hom->callback([&] { action = [&] { return detail::ga_hom_cmd(m, n); }; });

  auto* cg = app.add_subcommand("ga-cg", "Clebsch-Gordan decomposition of S^m V (x) S^n V");
  cg->add_option("-m", m, "First index")->required();
  cg->add_option("-n", n, "Second index")->required();
  cg->callback([&] { action = [&] { return detail::ga_cg_cmd(m, n); }; });

  auto* sl2 = app.add_subcommand("ga-sl2", "Consistency of Rep(G_a) with SL_2 up to S^max V");
  sl2->add_option("--max", m_max, "Largest index")->required();
  sl2->callback([&] { action = [&] { return detail::ga_sl2_cmd(m_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const Json result = action();
    if (pretty)
      detail::pretty(out, result, 0, "");
    else
      out << result.dump() << '\n';
    return 0;
  } catch (const ExponentHypothesisError& e) {
    err << "error: " << e.what() << "\n" << json::to_json(e.witness()).dump() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace wedkit::cli

#endif  // WEDKIT_TOOLS_CLI_HPP
