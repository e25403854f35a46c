#include "formint/cli.hpp"

#include <algorithm>
#include <chrono>

#include "formint/errors.hpp"
#include "formint/griffiths_dwork.hpp"
#include "formint/oneform.hpp"
#include "formint/parser.hpp"

namespace formint {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

json strings(const std::vector<MPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json basis_json(const RingPtr& ring, Basis b) {
  json a = json::array();
  for (int i : basis_indices(b)) a.push_back(ring->name(i));
  return a;
}

// Form variables in ring order; --order lists the first eliminated first,
// which is the last ring variable.
std::vector<std::string> ring_vars(const Command& c) {
  if (c.vars.empty()) throw UsageError("--vars is required");
  if (c.order.empty()) return c.vars;
  auto a = c.order, b = c.vars;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw UsageError("--order must be a permutation of --vars");
  return {c.order.rbegin(), c.order.rend()};
}

const std::string& single_payload(const Command& c) {
  if (c.payload.size() != 1) throw UsageError(c.verb + " takes exactly one expression");
  return c.payload[0];
}

DiffForm form_of(const Command& c, const RingPtr& R, int n, int degree) {
  DiffForm w = parse_form(single_payload(c), R, n);
  if (w.degree() != degree && !w.is_zero()) {
    throw PreconditionViolated("expected a " + std::to_string(degree) + "-form, got a " + std::to_string(w.degree()) +
                               "-form");
  }
  return w.is_zero() ? DiffForm(R, n, degree) : w;
}

json run_hermite(const Command& c, bool& verified) {
  auto names = ring_vars(c);
  auto R = make_form_ring(names);
  const int n = static_cast<int>(names.size());
  ParsedValue v = parse_expression(single_payload(c), R, n);
  if (v.is_form) {
    DiffForm w = v.form;
    if (w.degree() != 1) throw PreconditionViolated("hermite expects a 1-form or a scalar with --var");
    auto res = hermite_one_form(w);
    verified = exterior_derivative(DiffForm::scalar(R, n, res.g)) + res.tilde == w &&
               exterior_derivative(res.tilde).is_zero();
    return {{"g", res.g.to_string()}, {"tilde", res.tilde.to_string()}, {"exact", res.tilde.is_zero()}};
  }
  if (c.var.empty()) throw UsageError("hermite on a scalar needs --var");
  Var x = R->index_of(c.var);
  if (x < 0 || x >= n) throw UsageError("--var must be one of --vars");
  auto hr = hermite_rat(v.scalar.num(), v.scalar.den(), x);
  verified = hr.g.derivative(x) + hr.h == v.scalar;
  return {{"g", hr.g.to_string()}, {"h", hr.h.to_string()}};
}

json run_integrate1(const Command& c, bool& verified) {
  auto names = ring_vars(c);
  auto R = make_form_ring(names);
  const int n = static_cast<int>(names.size());
  DiffForm w = form_of(c, R, n, 1);
  auto H = hermite_one_form(w);
  Primitive P = integrate_closed_1form(w);
  verified = primitive_differential(P, R, n) == w;
  json r = primitive_json(P);
  r["hermite"] = {{"g", H.g.to_string()}, {"tilde", H.tilde.to_string()}};
  return r;
}

json run_integratep(const Command& c, bool& verified) {
  auto names = ring_vars(c);
  auto R = make_form_ring(names);
  const int n = static_cast<int>(names.size());
  DiffForm w = parse_form(single_payload(c), R, n);
  if (w.degree() < 1) throw PreconditionViolated("integratep expects a p-form with p >= 1");
  PrimitiveForm P = integrate_closed_pform(w);
  verified = expand_primitive_derivative(P) == w;
  json coeffs = json::array();
  for (const auto& [b, p] : P.coeffs) {
    json e = primitive_json(p);
    e["basis"] = basis_json(R, b);
    coeffs.push_back(e);
  }
  return {{"degree", P.degree}, {"coefficients", coeffs}};
}

json run_exact1(const Command& c, bool& verified) {
  auto names = ring_vars(c);
  auto R = make_form_ring(names);
  const int n = static_cast<int>(names.size());
  DiffForm w = form_of(c, R, n, 1);
  auto H = hermite_one_form(w);
  const bool exact = H.tilde.is_zero();
  verified = exterior_derivative(DiffForm::scalar(R, n, H.g)) + H.tilde == w;
  json r = {{"exact", exact}};
  if (exact) r["primitive"] = H.g.to_string();
  return r;
}

json gd_json(const ProjForm& F, const GDResult& g) {
  json stages = json::array();
  for (const auto& s : g.phis) stages.push_back({{"order", s.order}, {"A", strings(s.A)}});
  return {{"P", F.P.to_string()},      {"Q", F.Q.to_string()},
          {"ell", F.ell},              {"exact", g.exact},
          {"remainders", strings(g.remainders)}, {"stages", stages}};
}

json run_gd(const Command& c, bool& verified, int& exit_code) {
  ProjForm F;
  json r;
  if (!c.Q.empty()) {
    if (!c.payload.empty()) throw UsageError("gd takes either an affine integrand or --P/--Q, not both");
    if (c.vars.size() < 2) throw UsageError("gd with --Q needs the homogeneous coordinates in --vars");
    auto R = make_ring(c.vars);
    F.m = static_cast<int>(c.vars.size()) - 1;
    F.P = c.P.empty() ? MPoly(R, Rational(1)) : parse_poly(c.P, R);
    F.Q = parse_poly(c.Q, R);
    F.ell = c.ell;
  } else {
    auto names = ring_vars(c);
    auto R = make_form_ring(names);
    const int m = static_cast<int>(names.size());
    RatFunc f = parse_ratfunc(single_payload(c), R);
    auto h = homogenize_m_form(f, m);
    r["homogenized"] = {{"P", h.form.P.to_string()}, {"Q", h.form.Q.to_string()}, {"ell", h.form.ell}};
    r["violations"] = h.violations;
    if (h.zero) {
      r["exact"] = true;
      verified = true;
      return r;
    }
    if (!h.violations.empty()) {
      r["decided"] = false;
      exit_code = kIrregular;
      verified = false;
      return r;
    }
    F = h.form;
  }
  GDResult g = gd_reduce(F, c.early_exit);
  verified = c.early_exit ? false : g.reconstruction_checked;
  r["decided"] = true;
  r.update(gd_json(F, g));
  return r;
}

json run_smooth(const Command& c, bool& verified) {
  if (c.vars.empty()) throw UsageError("--vars is required");
  auto R = make_ring(c.vars);
  MPoly Q = parse_poly(single_payload(c), R);
  const bool s = is_smooth(Q);
  verified = true;
  return {{"smooth", s}};
}

json run_telescope(const Command& c, bool& verified) {
  auto names = ring_vars(c);
  auto R = make_form_ring(names);
  const int n = static_cast<int>(names.size());
  DiffForm w = form_of(c, R, n, 1);
  Telescoped T = ct_one_form(w);
  verified = verify_telescoper(T.L, w, T.certificate);
  return {{"operator", operator_json(T.L)}, {"certificate", T.certificate.to_string()}};
}

json run_verify_picard(const Command& c, bool& verified) {
  auto names = ring_vars(c);
  auto R = make_form_ring(names);
  if (c.payload.size() != names.size() + 1) throw UsageError("verify-picard takes f followed by one u_i per variable");
  RatFunc f = parse_ratfunc(c.payload[0], R);
  std::vector<RatFunc> u;
  for (std::size_t i = 1; i < c.payload.size(); ++i) u.push_back(parse_ratfunc(c.payload[i], R));
  verified = verify_picard_solution(f, u);
  return {{"holds", verified}};
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

json log_term_json(const LogTerm& t) {
  const RingPtr& R = t.respoly.ring() ? t.respoly.ring() : t.argpoly.ring();
  return {{"respoly", t.respoly.to_string()},
          {"argpoly", t.argpoly.to_string()},
          {"rootvar", R->name(R->root())},
          {"var", R->name(t.var)}};
}

json primitive_json(const Primitive& p) {
  json logs = json::array();
  for (const auto& t : p.logs) logs.push_back(log_term_json(t));
  return {{"rational", p.rational.to_string()}, {"logs", logs}};
}

json operator_json(const OreOp& L) {
  json cs = json::array();
  for (const auto& a : L.coeffs()) cs.push_back(a.to_string());
  return {{"coefficients", cs}, {"order", L.order()}, {"text", L.to_string()}};
}

CommandOutcome run_command(const Command& c) {
  CommandOutcome out;
  json input = {{"payload", c.payload}, {"vars", c.vars}};
  if (!c.order.empty()) input["order"] = c.order;
  if (!c.Q.empty()) input["Q"] = c.Q, input["P"] = c.P, input["ell"] = c.ell;
  out.doc = {{"command", c.verb}, {"input", input}};
  auto start = std::chrono::steady_clock::now();
  bool verified = false;
  try {
    if (c.param != "t") throw UsageError("the parameter is always named t");
    json r;
    if (c.verb == "hermite") {
      r = run_hermite(c, verified);
    } else if (c.verb == "integrate1") {
      r = run_integrate1(c, verified);
    } else if (c.verb == "integratep") {
      r = run_integratep(c, verified);
    } else if (c.verb == "exact1") {
      r = run_exact1(c, verified);
    } else if (c.verb == "gd") {
      r = run_gd(c, verified, out.exit_code);
    } else if (c.verb == "smooth") {
      r = run_smooth(c, verified);
    } else if (c.verb == "telescope") {
      r = run_telescope(c, verified);
    } else if (c.verb == "verify-picard") {
      r = run_verify_picard(c, verified);
    } else {
      throw UsageError("unknown command " + c.verb);
    }
    out.doc["result"] = r;
  } catch (const UsageError& e) {
    out.exit_code = kUsage;
    out.doc["error"] = error_json("usage", e.what());
  } catch (const NotClosed& e) {
    out.exit_code = kNotClosed;
    out.doc["error"] = error_json("not_closed", e.what());
    out.doc["error"]["indices"] = e.indices();
  } catch (const NotSmooth& e) {
    out.exit_code = kIrregular;
    out.doc["error"] = error_json("not_smooth", e.what());
  } catch (const RegularityViolated& e) {
    out.exit_code = kIrregular;
    out.doc["error"] = error_json("regularity", e.what());
  } catch (const ParseError& e) {
    out.exit_code = kBadInput;
    out.doc["error"] = error_json("parse", e.what());
    out.doc["error"]["line"] = e.line();
    out.doc["error"]["column"] = e.column();
    out.doc["error"]["expected"] = e.expected();
  } catch (const InternalAssertion& e) {
    out.exit_code = kInternal;
    out.doc["error"] = error_json("internal", e.what());
  } catch (const Error& e) {
    out.exit_code = kBadInput;
    out.doc["error"] = error_json("input", e.what());
  }
  out.doc["verified"] = out.exit_code == kOk && verified;
  out.doc["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace formint
