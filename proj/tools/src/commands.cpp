// Copyright 2026 The orekit Authors.
//
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

#include "orekit/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orekit/cli/session.hpp"
#include "orekit/eval.hpp"
#include "orekit/modstruct.hpp"
#include "orekit/orepoly.hpp"
#include "orekit/structure.hpp"

namespace orekit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string verb;
  std::string config;
  std::string poly;
  std::string point;
  std::string other;
  std::string element;
  std::string source;
  std::string target;
  std::size_t max_len = 2;
  bool unrestricted = false;
  bool non_monic = false;
  std::string out;
  bool timing = false;
};

const std::vector<std::string> kVerbs = {"validate", "eval",    "center",     "centralizer",
                                         "roots",    "classes", "semi-check", "semi-find",
                                         "hom",      "conj",    "related"};

// An option that the verb needs but was not given.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Invocation {
  const Options& opts;
  Session& session;
  Json inputs = Json::object();
  // Plain text block appended after the key/value listing in text mode.
  std::string table;

  const TwistContext& ctx() const { return *session.ctx; }
  ContextPtr ptr() const { return session.ctx; }
  const Ring& ring() const { return *session.ctx->ring(); }

  const std::string& need(const std::string& value, const char* flag) const {
    if (value.empty()) throw UsageError(opts.verb + " needs " + flag);
    return value;
  }

  OrePoly poly() {
    OrePoly f = parse_poly(ptr(), need(opts.poly, "--poly"));
    inputs["poly"] = print_poly(f);
    return f;
  }

  Point point(const std::string& text, const char* flag, const char* key) {
    Point a = parse_point(ctx(), need(text, flag));
    inputs[key] = print_point(ctx(), a);
    return a;
  }
};

Json elements_json(const Ring& ring, const std::vector<Elem>& elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(ring.print(e));
  return out;
}

Json points_json(const TwistContext& ctx, const std::vector<Point>& points) {
  Json out = Json::array();
  for (const Point& p : points) out.push_back(print_point(ctx, p));
  return out;
}

Json laws_json(const Ring& ring, const ValidationReport& report) {
  Json laws = Json::array();
  for (const LawCheck& c : report.checks) {
    Json law;
    law["name"] = c.name;
    law["passed"] = c.passed;
    if (c.witness) {
      law["witness"] = Json::array({ring.print(c.witness->first), ring.print(c.witness->second)});
    } else {
      law["witness"] = nullptr;
    }
    law["detail"] = c.detail;
    laws.push_back(std::move(law));
  }
  return laws;
}

Json phi_json(const Ring& ring, const std::vector<Elem>& phi) {
  Json out = Json::object();
  for (std::size_t code = 0; code < phi.size(); ++code) {
    out[ring.print(Elem{code})] = ring.print(phi[code]);
  }
  return out;
}

void require_valid(const Session& s) {
  if (s.report.passed()) return;
  for (const LawCheck& c : s.report.checks) {
    if (!c.passed) throw ValidationError("context fails " + c.name + " " + c.detail);
  }
}

Json load_json_argument(const std::string& text) {
  std::string body = text;
  if (body.find_first_not_of(" \t\n") == std::string::npos ||
      body[body.find_first_not_of(" \t\n")] != '{') {
    std::ifstream in(text);
    if (!in) throw PreconditionError("cannot open presentation file " + text);
    std::stringstream buffer;
    buffer << in.rdbuf();
    body = buffer.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

Json cmd_validate(Invocation& inv) {
  const Session& s = inv.session;
  Json r;
  r["passed"] = s.report.passed();
  r["state"] = to_string(s.ctx->state());
  r["exhaustive"] = s.report.exhaustive;
  r["pairs_checked"] = s.report.pairs_checked;
  r["laws"] = laws_json(inv.ring(), s.report);
  const ValidationReport embed = phi_embed_check(inv.ctx());
  r["phi_embed"] = Json{{"passed", embed.passed()}, {"laws", laws_json(inv.ring(), embed)}};
  return r;
}

Json cmd_eval(Invocation& inv) {
  const OrePoly f = inv.poly();
  const Point a = inv.point(inv.opts.point, "--point", "point");
  const Elem pmt = evaluate_pmt(f, a);
  const Elem reduce = evaluate_reduce(f, a);
  return Json{{"pmt", inv.ring().print(pmt)},
              {"reduce", inv.ring().print(reduce)},
              {"agree", pmt == reduce}};
}

Json cmd_center(Invocation& inv) {
  return Json{{"center", elements_json(inv.ring(), center_of_S(inv.ctx()))},
              {"label", "candidate"}};
}

Json cmd_centralizer(Invocation& inv) {
  const Point a = inv.point(inv.opts.point, "--point", "point");
  const Centralizer c = centralizer(inv.ctx(), a);
  return Json{{"centralizer", elements_json(inv.ring(), c.elements)},
              {"size", c.elements.size()},
              {"subring", c.is_subring},
              {"inverse_closed", c.inverse_closed},
              {"right_linear", right_linearity_check(inv.ctx(), a).holds}};
}

Json cmd_roots(Invocation& inv) {
  const std::vector<Point> v = roots(inv.poly());
  return Json{{"roots", points_json(inv.ctx(), v)}, {"count", v.size()}};
}

Json cmd_classes(Invocation& inv) {
  const RootClassReport rep = class_decomposition(inv.poly());
  const auto& ctx = inv.ctx();
  Json classes = Json::array();
  std::vector<std::array<std::string, 3>> rows{{"representative", "|E(f,a)|", "slice"}};
  for (const RootClass& c : rep.classes) {
    classes.push_back(Json{{"representative", print_point(ctx, c.representative)},
                           {"e_set", elements_json(inv.ring(), c.e_set)},
                           {"slice", points_json(ctx, c.slice)}});
    std::string slice;
    for (const Point& p : c.slice) slice += (slice.empty() ? "" : " ") + print_point(ctx, p);
    rows.push_back({print_point(ctx, c.representative), std::to_string(c.e_set.size()), slice});
  }
  std::size_t w0 = 0, w1 = 0;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    w1 = std::max(w1, row[1].size());
  }
  for (const auto& row : rows) {
    inv.table += pad(row[0], w0) + "  " + pad(row[1], w1) + "  " + row[2] + "\n";
  }
  return Json{{"roots", points_json(ctx, rep.roots)},
              {"root_count", rep.roots.size()},
              {"classes", std::move(classes)},
              {"coverage", rep.coverage},
              {"kernel_criterion", rep.kernel_criterion},
              {"module_closure", rep.module_closure},
              {"slice_exact", rep.slice_exact}};
}

Json cmd_semi_check(Invocation& inv) {
  const OrePoly p = inv.poly();
  const auto cert = is_semi_invariant(p);
  const bool certified = cert && cert->verified;
  Json r;
  r["semi_invariant"] = certified;
  r["unique"] = cert ? Json(cert->unique) : Json(nullptr);
  r["phi"] = cert ? phi_json(inv.ring(), cert->phi) : Json(nullptr);
  try {
    const OperatorCheck op = semiinvariant_operator_check(p);
    Json o{{"applicable", true},
           {"variable", "t" + std::to_string(op.variable + 1)},
           {"degree", op.degree},
           {"identity_holds", op.identity_holds},
           {"hypothesis_verified", op.hypothesis_verified}};
    o["witness"] = op.witness ? Json::array({inv.ring().print(op.witness->first),
                                             inv.ring().print(op.witness->second)})
                              : Json(nullptr);
    r["operator_check"] = std::move(o);
  } catch (const PreconditionError& e) {
    r["operator_check"] = Json{{"applicable", false}, {"reason", e.what()}};
  }
  if (certified && inv.ring().is_field()) {
    r["root_closure"] = semiinvariant_root_closure(*cert).holds;
  }
  return r;
}

Json cmd_semi_find(Invocation& inv) {
  SemiSearchOptions options;
  options.unrestricted = inv.opts.unrestricted;
  options.monic_only = !inv.opts.non_monic;
  inv.inputs["max_len"] = inv.opts.max_len;
  inv.inputs["search"] = options.unrestricted ? "unrestricted" : "binary";
  if (options.unrestricted) inv.inputs["monic_only"] = options.monic_only;
  const auto found = find_semi_invariants(inv.ptr(), inv.opts.max_len, options);
  Json list = Json::array();
  for (const auto& cert : found) {
    list.push_back(Json{{"poly", print_poly(cert.p)}, {"phi", phi_json(inv.ring(), cert.phi)}});
  }
  return Json{{"count", found.size()}, {"polynomials", std::move(list)}};
}

Json cmd_hom(Invocation& inv) {
  const Json src = load_json_argument(inv.need(inv.opts.source, "--source"));
  const Json dst = load_json_argument(inv.need(inv.opts.target, "--target"));
  const ModulePresentation p1 = load_presentation(inv.ptr(), src, "$source");
  const ModulePresentation p2 = load_presentation(inv.ptr(), dst, "$target");
  auto presentation_json = [&](const ModulePresentation& p) {
    Json xs = Json::array();
    for (const Matrix& m : p.x) xs.push_back(print_matrix(inv.ring(), m));
    return Json{{"rank", p.rank}, {"X", std::move(xs)}};
  };
  inv.inputs["source"] = presentation_json(p1);
  inv.inputs["target"] = presentation_json(p2);
  const HomSolution sol = hom_solve(p1, p2);
  Json basis = Json::array();
  for (const Matrix& m : sol.basis) basis.push_back(print_matrix(inv.ring(), m));
  Json r;
  r["method"] = sol.linear ? "linear" : "enumeration";
  r["prime"] = sol.linear ? Json(sol.prime) : Json(nullptr);
  r["dimension"] = sol.linear ? Json(sol.dimension) : Json(nullptr);
  r["count"] = sol.count ? Json(*sol.count) : Json(nullptr);
  r[sol.linear ? "basis" : "solutions"] = std::move(basis);
  return r;
}

Json cmd_conj(Invocation& inv) {
  const Point a = inv.point(inv.opts.point, "--point", "point");
  const Elem x = inv.ring().parse(inv.need(inv.opts.element, "--element"));
  inv.inputs["element"] = inv.ring().print(x);
  return Json{{"conjugate", print_point(inv.ctx(), conjugate(inv.ctx(), a, x))}};
}

Json cmd_related(Invocation& inv) {
  const Point a = inv.point(inv.opts.point, "--point", "point");
  const Point b = inv.point(inv.opts.other, "--other", "other");
  const auto x = related(inv.ctx(), a, b);
  return Json{{"related", x.has_value()},
              {"x", x ? Json(inv.ring().print(*x)) : Json(nullptr)},
              {"class_size", delta_class(inv.ctx(), a).size()}};
}

void render_text(const Json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      render_text(v, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (value.is_array() &&
      std::any_of(value.begin(), value.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      render_text(value[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out << prefix << ": ";
  if (value.is_array()) {
    out << "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      out << (i ? ", " : "") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
    }
    out << "]\n";
  } else {
    out << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

int execute(const Options& opts, std::ostream& out) {
  Session session = load_session_file(opts.config);
  OutputFormat format = session.output;
  if (opts.out == "json") format = OutputFormat::Json;
  if (opts.out == "text") format = OutputFormat::Text;

  static const std::map<std::string, std::function<Json(Invocation&)>> table = {
      {"validate", cmd_validate},       {"eval", cmd_eval},
      {"center", cmd_center},           {"centralizer", cmd_centralizer},
      {"roots", cmd_roots},             {"classes", cmd_classes},
      {"semi-check", cmd_semi_check},   {"semi-find", cmd_semi_find},
      {"hom", cmd_hom},                 {"conj", cmd_conj},
      {"related", cmd_related}};

  if (opts.verb != "validate") require_valid(session);
  Invocation inv{opts, session, Json::object(), {}};
  const auto start = std::chrono::steady_clock::now();
  Json result = table.at(opts.verb)(inv);
  const auto stop = std::chrono::steady_clock::now();

  const Ring& ring = *session.ctx->ring();
  const Guards& g = session.ctx->guards();
  Json report;
  report["command"] = opts.verb;
  report["context"] = Json{{"ring", ring.describe()},
                           {"n", session.ctx->n()},
                           {"sigma", describe_sigma(ring, session.ctx->sigma_spec())},
                           {"delta", describe_delta(ring, session.ctx->delta_spec())},
                           {"state", to_string(session.ctx->state())}};
  report["inputs"] = std::move(inv.inputs);
  report["result"] = std::move(result);
  report["guards"] = Json{{"max_ring_card", g.max_ring_card},
                          {"max_pairs", g.max_pairs},
                          {"max_terms", g.max_terms},
                          {"max_search", g.max_search},
                          {"pairs_checked", session.report.pairs_checked}};
  if (opts.timing) {
    report["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  }

  if (format == OutputFormat::Json) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, "", out);
    if (!inv.table.empty()) out << "\n" << inv.table;
  }
  if (opts.verb == "validate" && !session.report.passed()) return kValidation;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact computations in Ore extensions over finite rings", "orekit"};
  app.add_option("verb", opts.verb, "Command to run")->required()->check(CLI::IsMember(kVerbs));
  app.add_option("--config", opts.config, "Session config (JSON)")->required();
  app.add_option("--poly", opts.poly, "Polynomial in t1..tn");
  app.add_option("--point", opts.point, "Point (a1, ..., an)");
  app.add_option("--other", opts.other, "Second point for related");
  app.add_option("--element", opts.element, "Ring element for conj");
  app.add_option("--source", opts.source, "Source presentation (JSON text or file)");
  app.add_option("--target", opts.target, "Target presentation (JSON text or file)");
  app.add_option("--max-len", opts.max_len, "Word length bound for semi-find");
  app.add_flag("--unrestricted", opts.unrestricted, "semi-find over all coefficients");
  app.add_flag("--non-monic", opts.non_monic, "semi-find: allow any leading coefficient");
  app.add_option("--out", opts.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opts.timing, "Add wall-clock timing to the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "orekit: usage: " << e.what() << "\n";
    return kFailure;
  }

  try {
    return execute(opts, out);
  } catch (const ParseError& e) {
    err << "orekit: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const GuardExceeded& e) {
    err << "orekit: guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const SchemaError& e) {
    err << "orekit: schema error: " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    err << "orekit: validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const MismatchError& e) {
    err << "orekit: validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const UsageError& e) {
    err << "orekit: usage: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "orekit: error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace orekit::cli
