#include "wittmod/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "wittmod/automorphism.hpp"
#include "wittmod/closure.hpp"
#include "wittmod/constraint.hpp"
#include "wittmod/error.hpp"
#include "wittmod/expression.hpp"
#include "wittmod/lie_algebra.hpp"
#include "wittmod/omega_module.hpp"
#include "wittmod/weight_module.hpp"

namespace wittmod {

using json = nlohmann::ordered_json;

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) {
    n += r.passed ? 0 : 1;
  }
  return n;
}

std::string Report::to_json(bool include_timing) const {
  json out;
  out["header"] = json::parse(header.empty() ? "{}" : header);
  json recs = json::array();
  for (const auto& r : records) {
    json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) {
      inputs[k] = v;
    }
    j["inputs"] = inputs;
    j["verdict"] = r.passed ? "pass" : "fail";
    j["witness"] = r.witness;
    if (include_timing) {
      j["wall_time_ms"] = r.wall_time_ms;
    }
    recs.push_back(std::move(j));
  }
  out["records"] = recs;
  out["summary"] = {{"checks", records.size()}, {"failed", failures()}};
  return out.dump(2) + "\n";
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"jacobi",     "automorphism", "module-axiom", "twist",
                                              "iso",        "simplicity",   "constraint",   "weighting",
                                              "exactness",  "structure",    "orbit"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;
using Inputs = std::vector<std::pair<std::string, std::string>>;

struct Outcome {
  bool passed = false;
  std::string witness;
};

struct NamedModule {
  std::string name;
  OmegaModuleSpec spec;
};

class Runner {
 public:
  Runner(const json& config, Report& report) : config_(config), report_(report) {
    seed_ = config_.value("seed", 1ULL);
    rng_.seed(seed_);
    if (config_.contains("groups")) {
      for (const auto& [name, gens] : config_["groups"].items()) {
        groups_.emplace(name, parse_group(strings(gens, "groups." + name)));
      }
    }
    if (config_.contains("modules")) {
      for (const auto& m : config_["modules"]) {
        modules_.push_back(module_from(m));
      }
    }
  }

  json header(const std::vector<std::string>& suites) const {
    json h;
    h["seed"] = seed_;
    h["suites"] = suites;
    json groups = json::object();
    for (const auto& [name, g] : groups_) {
      json basis = json::array();
      for (const auto& e : g->basis()) {
        basis.push_back(e.to_string());
      }
      groups[name] = {{"super", g->is_super()}, {"basis", basis}};
    }
    h["canonical_bases"] = groups;
    h["config"] = config_;
    return h;
  }

  void run(const std::string& suite) {
    static const std::map<std::string, void (Runner::*)()> table{
        {"jacobi", &Runner::jacobi},           {"automorphism", &Runner::automorphism},
        {"module-axiom", &Runner::module_axiom}, {"twist", &Runner::twist},
        {"iso", &Runner::iso},                 {"simplicity", &Runner::simplicity},
        {"constraint", &Runner::constraint},   {"weighting", &Runner::weighting},
        {"exactness", &Runner::exactness},     {"structure", &Runner::structure},
        {"orbit", &Runner::orbit},
    };
    suite_ = suite;
    (this->*table.at(suite))();
  }

 private:
  // Config access -------------------------------------------------------

  static std::vector<std::string> strings(const json& j, const std::string& where) {
    if (!j.is_array()) {
      throw Error(ErrorCode::parse_error, where + ": expected a list of strings");
    }
    std::vector<std::string> out;
    for (const auto& x : j) {
      if (!x.is_string()) {
        throw Error(ErrorCode::parse_error, where + ": expected a string, got " + x.dump());
      }
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  static std::string text(const json& j, const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) {
      return fallback;
    }
    if (j[key].is_number_integer()) {
      return std::to_string(j[key].get<long>());
    }
    if (!j[key].is_string()) {
      throw Error(ErrorCode::parse_error, key + ": expected a string, got " + j[key].dump());
    }
    return j[key].get<std::string>();
  }

  static GaussianRational scalar(const json& j, const std::string& key, const std::string& fallback) {
    return parse_scalar(text(j, key, fallback));
  }

  static std::vector<GaussianRational> scalars(const json& j, const std::string& key,
                                               const std::vector<std::string>& fallback) {
    std::vector<GaussianRational> out;
    for (const auto& s : j.contains(key) ? strings(j[key], key) : fallback) {
      out.push_back(parse_scalar(s));
    }
    return out;
  }

  const json& section(const std::string& name) const {
    static const json empty = json::object();
    return config_.contains(name) ? config_[name] : empty;
  }

  GroupPtr group(const std::string& name) const {
    const auto it = groups_.find(name);
    if (it == groups_.end()) {
      throw Error(ErrorCode::parse_error, "unknown group \"" + name + "\"");
    }
    return it->second;
  }

  Character character(const GroupPtr& g, const json& j, const std::string& key) const {
    if (!j.contains(key)) {
      return Character::trivial(g);
    }
    std::vector<GaussianRational> values;
    for (const auto& s : strings(j[key], key)) {
      values.push_back(parse_scalar(s));
    }
    return {g, std::move(values)};
  }

  NamedModule module_from(const json& m) const {
    const GroupPtr g = group(text(m, "group", ""));
    OmegaModuleSpec spec =
        make_omega_spec(character(g, m, "f"), scalar(m, "alpha", "0"), m.value("flip", false));
    std::string name = m.contains("name") ? m["name"].get<std::string>() : spec.to_string();
    return {std::move(name), std::move(spec)};
  }

  std::vector<NamedModule> selected_modules(const json& sec) const {
    if (!sec.contains("modules")) {
      return modules_;
    }
    std::vector<NamedModule> out;
    for (const auto& name : strings(sec["modules"], "modules")) {
      bool found = false;
      for (const auto& m : modules_) {
        if (m.name == name) {
          out.push_back(m);
          found = true;
        }
      }
      if (!found) {
        throw Error(ErrorCode::parse_error, "unknown module \"" + name + "\"");
      }
    }
    return out;
  }

  static AlgebraKind kind_from(const std::string& s) {
    if (s == "Witt") return AlgebraKind::witt;
    if (s == "Virasoro") return AlgebraKind::virasoro;
    if (s == "SuperWitt") return AlgebraKind::super_witt;
    if (s == "SuperVirasoro") return AlgebraKind::super_virasoro;
    throw Error(ErrorCode::parse_error, "unknown algebra kind \"" + s + "\"");
  }

  static CentralTerm central_from(const std::string& s) {
    if (s == "standard") return CentralTerm::standard;
    if (s == "cubic") return CentralTerm::cubic;
    if (s == "quadratic") return CentralTerm::quadratic;
    throw Error(ErrorCode::parse_error, "unknown central term \"" + s + "\"");
  }

  static std::vector<AlgebraKind> kinds_for(const IndexGroup& g) {
    if (g.is_super()) {
      return {AlgebraKind::super_witt, AlgebraKind::super_virasoro};
    }
    return {AlgebraKind::witt, AlgebraKind::virasoro};
  }

  // Deterministic sampling from the seeded generator.
  Character sample_character(const GroupPtr& g) {
    static const char* pool[] = {"1", "2", "-1", "i", "1/2", "-i", "3", "1+i"};
    std::vector<GaussianRational> values;
    for (std::size_t k = 0; k < g->basis().size(); ++k) {
      const bool torsion = g->has_odd_torsion() && k + 1 == g->basis().size();
      values.push_back(torsion ? GaussianRational(rng_() % 2 == 0 ? 1 : -1)
                               : parse_scalar(pool[rng_() % std::size(pool)]));
    }
    return {g, std::move(values)};
  }

  static std::vector<GaussianRational> unit_candidates() {
    return {GaussianRational(1), GaussianRational(-1), GaussianRational::i(), -GaussianRational::i()};
  }

  // Recording -----------------------------------------------------------

  void record(const std::string& check, Inputs inputs, const std::function<Outcome()>& body) {
    CheckRecord r;
    r.suite = suite_;
    r.check = check;
    r.inputs = std::move(inputs);
    const auto start = Clock::now();
    try {
      const Outcome o = body();
      r.passed = o.passed;
      r.witness = o.witness;
    } catch (const Error& e) {
      r.passed = false;
      r.witness = e.what();
    }
    r.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report_.records.push_back(std::move(r));
  }

  static Outcome pass(std::string witness = {}) { return {true, std::move(witness)}; }
  static Outcome fail(std::string witness) { return {false, std::move(witness)}; }

  // Suites --------------------------------------------------------------

  void jacobi() {
    const json& sec = section("jacobi");
    const Rational window = scalar(sec, "window", "3").real();
    for (const auto& a : sec.value("algebras", json::array())) {
      const Algebra g(kind_from(text(a, "kind", "")), group(text(a, "group", "")),
                      central_from(text(a, "central", "standard")));
      Inputs in{{"algebra", g.to_string()}, {"central", text(a, "central", "standard")},
                {"window", window.get_str()}};
      record("super-jacobi", in, [&]() {
        std::vector<LieElement> basis;
        for (const auto& s : g.basis_symbols(g.group().window(window))) {
          g.validate(s);
          basis.emplace_back(s);
        }
        for (const auto& x : basis) {
          for (const auto& y : basis) {
            const int sign = koszul_sign(*x.parity(), *y.parity());
            const LieElement d = g.bracket_unchecked(x, y) + GaussianRational(sign) * g.bracket_unchecked(y, x);
            if (!d.is_zero()) {
              return fail("antisymmetry fails on (" + x.to_string() + ", " + y.to_string() + ")");
            }
          }
        }
        // The cyclic sum changes only by a sign under a transposition once
        // super-antisymmetry holds, so unordered triples cover all of them.
        const Bracket b = [&g](const LieElement& u, const LieElement& v) { return g.bracket_unchecked(u, v); };
        std::size_t triples = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          for (std::size_t j = i; j < basis.size(); ++j) {
            for (std::size_t k = j; k < basis.size(); ++k) {
              ++triples;
              if (!jacobiator(b, basis[i], basis[j], basis[k]).is_zero()) {
                return fail("(" + basis[i].to_string() + ", " + basis[j].to_string() + ", " +
                            basis[k].to_string() + ")");
              }
            }
          }
        }
        return pass(std::to_string(basis.size()) + " basis elements, " + std::to_string(triples) +
                    " unordered triples");
      });
    }
  }

  void automorphism() {
    const json& sec = section("automorphism");
    const Rational window = scalar(sec, "window", "2").real();
    const long samples = sec.value("characters", 2L);
    for (const auto& name : strings(sec.value("groups", json::array()), "automorphism.groups")) {
      const GroupPtr gp = group(name);
      for (const AlgebraKind kind : kinds_for(*gp)) {
        const Algebra g(kind, gp);
        const auto pairs = basis_pairs(g.basis_symbols(gp->window(window)));
        for (const auto& a : unit_candidates()) {
          if (!gp->scaling_is_valid(a, g.is_super())) {
            continue;
          }
          for (long s = 0; s <= samples; ++s) {
            const Character f = s == 0 ? Character::trivial(gp) : sample_character(gp);
            record("preserves-bracket",
                   {{"algebra", g.to_string()}, {"a", a.to_string()}, {"f", f.to_string()},
                    {"window", window.get_str()}},
                   [&]() {
                     const Automorphism phi = Automorphism::make(g, a, f);
                     const LieMap map = [&phi](const LieElement& x) { return phi(x); };
                     if (auto bad = bracket_violation(g, map, pairs)) {
                       return fail("(" + bad->first.to_string() + ", " + bad->second.to_string() + ")");
                     }
                     return pass(std::to_string(pairs.size()) + " pairs");
                   });
          }
        }
      }
    }
    for (const auto& bad : sec.value("invalid", json::array())) {
      const GroupPtr gp = group(text(bad, "group", ""));
      const GaussianRational a = scalar(bad, "a", "2");
      const Algebra g(kinds_for(*gp).front(), gp);
      record("rejects-invalid-scaling", {{"algebra", g.to_string()}, {"a", a.to_string()}}, [&]() {
        try {
          Automorphism::make(g, a, Character::trivial(gp));
        } catch (const Error& e) {
          if (e.code() == ErrorCode::invalid_scaling) {
            return pass(e.what());
          }
          throw;
        }
        return fail("accepted a = " + a.to_string());
      });
    }
  }

  void module_axiom() {
    const json& sec = section("module-axiom");
    const Rational window = scalar(sec, "window", "2").real();
    const long degree = sec.value("degree", 5L);
    for (const auto& m : selected_modules(sec)) {
      for (const AlgebraKind kind : kinds_for(m.spec.group())) {
        const Algebra g(kind, m.spec.f.group_ptr());
        record("bracket-compatibility",
               {{"module", m.name}, {"algebra", g.to_string()}, {"window", window.get_str()},
                {"degree", std::to_string(degree)}},
               [&]() {
                 const auto symbols = g.basis_symbols(g.group().window(window));
                 const auto vectors = monomials(m.spec, degree);
                 const auto action = [&m](const LieElement& e, const OmegaElement& u) {
                   return act(m.spec, e, u);
                 };
                 for (const auto& x : symbols) {
                   for (const auto& y : symbols) {
                     for (const auto& v : vectors) {
                       const OmegaElement d = module_axiom_defect(g, action, LieElement(x), LieElement(y), v);
                       if (!d.is_zero()) {
                         return fail("x=" + x.to_string() + " y=" + y.to_string() + " v=" + v.to_string() +
                                     " defect " + d.to_string());
                       }
                     }
                   }
                 }
                 if (g.has_center()) {
                   for (const auto& v : vectors) {
                     if (!act(m.spec, LieElement::C(), v).is_zero()) {
                       return fail("C acts nontrivially on " + v.to_string());
                     }
                   }
                 }
                 return pass(std::to_string(symbols.size() * symbols.size() * vectors.size()) + " cases");
               });
      }
    }
  }

  void twist() {
    const json& sec = section("twist");
    const Rational window = scalar(sec, "window", "2").real();
    const long degree = sec.value("degree", 4L);
    const long samples = sec.value("characters", 2L);
    for (const auto& m : selected_modules(sec)) {
      const GroupPtr gp = m.spec.f.group_ptr();
      const Algebra g(kinds_for(*gp).back(), gp);
      const auto ops = window_operators(*gp, window);
      const auto vectors = monomials(m.spec, degree);
      for (const auto& a : unit_candidates()) {
        if (!gp->scaling_is_valid(a, g.is_super())) {
          continue;
        }
        for (long s = 0; s <= samples; ++s) {
          const Character f = s == 0 ? Character::trivial(gp) : sample_character(gp);
          record("twist-intertwines",
                 {{"module", m.name}, {"a", a.to_string()}, {"f", f.to_string()}, {"window", window.get_str()},
                  {"degree", std::to_string(degree)}},
                 [&]() {
                   const Automorphism phi = Automorphism::make(g, a, f);
                   const OmegaModuleSpec twisted = wittmod::twist(m.spec, phi);
                   // g'(m) = f(m) g(m/b), checked pointwise on the window.
                   for (const auto& e : gp->window(window)) {
                     const GaussianRational expected =
                         f(e) * m.spec.f(GroupElement{e.value / phi.index_scale(), e.parity});
                     if (!(twisted.f(e) == expected)) {
                       return fail("g'(" + e.to_string() + ") = " + twisted.f(e).to_string() + ", expected " +
                                   expected.to_string());
                     }
                   }
                   if (!twist_intertwines(m.spec, phi, ops, vectors)) {
                     return fail("intertwiner fails for " + twisted.to_string());
                   }
                   return pass(twisted.f.to_string());
                 });
        }
      }
    }
  }

  void iso() {
    const json& sec = section("iso");
    std::vector<NamedModule> pool = selected_modules(sec);
    // Companions predicted isomorphic / non-isomorphic to each super module.
    const std::size_t base = pool.size();
    for (std::size_t k = 0; k < base; ++k) {
      const NamedModule m = pool[k];
      if (!m.spec.is_super()) {
        continue;
      }
      OmegaModuleSpec twisted_char = m.spec;
      twisted_char.f = m.spec.f * Character::parity_character(m.spec.f.group_ptr());
      record("parity-character", {{"module", m.name}}, [&]() {
        return isomorphic(m.spec, twisted_char) ? pass() : fail("f*phi not recognised");
      });
      record("flip-not-isomorphic", {{"module", m.name}}, [&]() {
        const OmegaModuleSpec flipped = parity_flip(m.spec);
        if (!(parity_flip(flipped) == m.spec)) {
          return fail("flip is not an involution");
        }
        for (const auto& other : pool) {
          if (other.spec.group() == m.spec.group() && other.spec.parity_flipped == m.spec.parity_flipped &&
              isomorphic(flipped, other.spec)) {
            return fail("Pi(" + m.name + ") ~ " + other.name);
          }
        }
        return pass();
      });
      pool.push_back({m.name + "*phi", twisted_char});
      pool.push_back({"Pi(" + m.name + ")", parity_flip(m.spec)});
    }
    record("equivalence-relation", {{"modules", std::to_string(pool.size())}}, [&]() {
      const auto same = [](const NamedModule& a, const NamedModule& b) { return a.spec.group() == b.spec.group(); };
      for (const auto& a : pool) {
        if (!isomorphic(a.spec, a.spec)) {
          return fail("not reflexive at " + a.name);
        }
        for (const auto& b : pool) {
          if (!same(a, b)) {
            continue;
          }
          if (isomorphic(a.spec, b.spec) != isomorphic(b.spec, a.spec)) {
            return fail("not symmetric at " + a.name + ", " + b.name);
          }
          for (const auto& c : pool) {
            if (same(a, c) && isomorphic(a.spec, b.spec) && isomorphic(b.spec, c.spec) &&
                !isomorphic(a.spec, c.spec)) {
              return fail("not transitive at " + a.name + ", " + b.name + ", " + c.name);
            }
          }
        }
      }
      return pass();
    });
    record("alpha-separates", {{"modules", std::to_string(base)}}, [&]() {
      for (std::size_t i = 0; i < base; ++i) {
        for (std::size_t j = 0; j < base; ++j) {
          const auto& a = pool[i].spec;
          const auto& b = pool[j].spec;
          if (a.group() == b.group() && !(a.alpha == b.alpha) && isomorphic(a, b)) {
            return fail(pool[i].name + " ~ " + pool[j].name);
          }
        }
      }
      return pass();
    });
  }

  void simplicity() {
    const json& sec = section("simplicity");
    ClosureBounds bounds;
    bounds.degree = sec.value("degree", 8L);
    bounds.max_rounds = sec.value("rounds", 16UL);
    bounds.window = scalar(sec, "window", "2").real();
    const long seed_degree = sec.value("seed_degree", 3L);
    for (const auto& m : selected_modules(sec)) {
      const bool expect_simple = !m.spec.alpha.is_zero();
      record(expect_simple ? "simple" : "proper-submodule",
             {{"module", m.name}, {"seed_degree", std::to_string(seed_degree)},
              {"degree", std::to_string(bounds.degree)}, {"rounds", std::to_string(bounds.max_rounds)},
              {"window", bounds.window.get_str()}},
             [&]() {
               const auto seeds = monomials(m.spec, seed_degree);
               const SimplicityCertificate cert = simplicity_certificate(m.spec, seeds, bounds);
               if (expect_simple) {
                 if (cert.verdict != Verdict::simple_witness) {
                   return fail(std::string(to_string(cert.verdict)));
                 }
                 if (!verify_certificate(m.spec, cert)) {
                   return fail("certificate replay failed");
                 }
                 std::size_t longest = 0;
                 for (const auto& s : cert.seeds) {
                   longest = std::max(longest, s.closure.trace.size());
                 }
                 return pass("replayed " + std::to_string(cert.seeds.size()) + " traces, longest " +
                             std::to_string(longest));
               }
               // Every seed with zero constant term stays inside the proper submodule.
               const auto ops = window_operators(m.spec.group(), bounds.window);
               for (const auto& s : cert.seeds) {
                 if (!s.seed.one.coefficient(0).is_zero()) {
                   continue;
                 }
                 if (s.verdict != Verdict::proper_submodule_witness) {
                   return fail(s.seed.to_string() + ": " + std::string(to_string(s.verdict)));
                 }
                 if (!zero_constant_term(s.closure.basis)) {
                   return fail(s.seed.to_string() + ": closure has a constant term");
                 }
                 if (!quotient_is_trivial(m.spec, s.closure.basis, ops, bounds.degree)) {
                   return fail(s.seed.to_string() + ": quotient action is not zero");
                 }
               }
               if (cert.verdict != Verdict::proper_submodule_witness) {
                 return fail(std::string(to_string(cert.verdict)));
               }
               return pass();
             });
    }
  }

  void constraint() {
    const json& sec = section("constraint");
    const auto ks = scalars(sec, "K", {"1", "-1/2", "i"});
    const auto indices = scalars(sec, "indices", {"0", "1", "-1", "2", "-2", "3", "-3", "4", "-4"});
    std::vector<std::pair<GaussianRational, GaussianRational>> pairs;
    for (const auto& m : indices) {
      for (const auto& n : indices) {
        bool present = false;
        for (const auto& k : indices) {
          present = present || k == m + n;
        }
        if (present) {
          pairs.emplace_back(m, n);
        }
      }
    }
    const std::vector<std::pair<GaussianRational, GaussianRational>> forcing{{2, -2}};
    for (const auto& m : selected_modules(sec)) {
      if (m.spec.is_super()) {
        continue;
      }
      record("K-zero-passes", {{"module", m.name}, {"pairs", std::to_string(pairs.size())}}, [&]() {
        return virasoro_constraint_check(m.spec.f, m.spec.alpha, GaussianRational(0), pairs)
                   ? pass()
                   : fail("residual nonzero with K = 0");
      });
      for (const auto& K : ks) {
        record("K-nonzero-fails", {{"module", m.name}, {"K", K.to_string()}, {"pair", "(2, -2)"}}, [&]() {
          const ActionTable q = omega_action_table(m.spec.f, m.spec.alpha, {2, -2, 0});
          const Polynomial r = constraint_residual(q, 2, -2, K);
          if (virasoro_constraint_check(m.spec.f, m.spec.alpha, K, forcing)) {
            return fail("constraint holds with K = " + K.to_string());
          }
          return pass("residual " + r.to_string());
        });
      }
      record("recover-parameters", {{"module", m.name}, {"indices", std::to_string(indices.size())}}, [&]() {
        const Recovery rec = recover_module_parameters(omega_action_table(m.spec.f, m.spec.alpha, indices));
        if (const auto* bad = std::get_if<Inconsistency>(&rec)) {
          return fail(bad->relation + " at (" + bad->m.to_string() + ", " + bad->n.to_string() + "): " + bad->detail);
        }
        const auto& p = std::get<ModuleParameters>(rec);
        if (!(p.alpha == m.spec.alpha) || !p.K.is_zero()) {
          return fail("alpha " + p.alpha.to_string() + ", K " + p.K.to_string());
        }
        for (const auto& [idx, lambda] : p.lambda) {
          if (!(lambda == m.spec.f(idx))) {
            return fail("lambda_" + idx.to_string() + " = " + lambda.to_string());
          }
        }
        return pass("alpha " + p.alpha.to_string() + ", K 0");
      });
    }
  }

  void weighting() {
    const json& sec = section("weighting");
    const auto weights = scalars(sec, "weights", {"-3", "-2", "-1", "0", "1", "2", "3"});
    const Rational window = scalar(sec, "window", "2").real();
    for (const auto& c : sec.value("cases", json::array())) {
      const NamedModule m = module_from(c["module"]);
      const GroupPtr ext = group(text(c, "extension_group", ""));
      const Character f_ext = character(ext, c, "extension_f");
      const auto ops = window_operators(m.spec.group(), window);
      record("matches-intermediate",
             {{"module", m.name}, {"extension", f_ext.to_string()},
              {"target", (m.spec.is_super() ? "sV(" : "V(") + (GaussianRational(1) - m.spec.alpha).to_string() + ")"},
              {"weights", std::to_string(weights.size())}, {"operators", std::to_string(ops.size())}},
             [&]() {
               if (!restriction_agrees(f_ext, m.spec.f)) {
                 return fail("extension does not restrict to f");
               }
               return weighting_matches_intermediate(m.spec, f_ext, weights, ops) ? pass()
                                                                                  : fail("actions differ");
             });
    }
  }

  void exactness() {
    const json& sec = section("exactness");
    const auto weights = scalars(sec, "weights", {"-3", "-2", "-1", "0", "1", "2", "3", "1/2"});
    const Rational window = scalar(sec, "window", "2").real();
    const long degree = sec.value("degree", 4L);
    for (const auto& t : sec.value("targets", json::array())) {
      const GroupPtr gp = group(text(t, "group", ""));
      const OmegaModuleSpec target = make_omega_spec(character(gp, t, "f"), GaussianRational(0));
      const auto ops = window_operators(*gp, window);
      const bool super_mode = gp->is_super();
      const std::string name = super_mode ? "psi2" : "psi1";
      const OmegaMorphism psi = super_mode ? embed_psi2(target) : embed_psi1(target);
      const WeightedMorphism wpsi = super_mode ? weighted_psi2(target) : weighted_psi1(target);
      Inputs in{{"map", name}, {"target", target.to_string()}};
      record("omega-embedding", in, [&]() {
        const auto vectors = monomials(psi.source, degree);
        if (!intertwines(psi, ops, vectors)) {
          return fail("not a module map");
        }
        if (!injective_on(psi, monomials(psi.source, 6))) {
          return fail("not injective");
        }
        if (!cokernel_is_trivial(psi, ops, monomials(target, degree))) {
          return fail("cokernel is not trivial");
        }
        return pass(psi.rule);
      });
      record("weighted-intertwines", in, [&]() {
        return weighted_intertwines(wpsi, weights, ops) ? pass() : fail("W(psi) is not a module map");
      });
      record("kernel-cokernel", in, [&]() {
        std::string dims;
        for (const auto& c : weights) {
          const std::size_t k = wpsi.kernel_dimension(c);
          const std::size_t q = wpsi.cokernel_dimension(c);
          dims += c.to_string() + ":" + std::to_string(k) + "/" + std::to_string(q) + " ";
          const std::size_t expected = c.is_zero() ? 1 : 0;
          if (k != expected || q != expected) {
            return fail("weight " + c.to_string() + " kernel " + std::to_string(k) + " cokernel " +
                        std::to_string(q));
          }
        }
        return pass("weight:kernel/cokernel " + dims);
      });
    }
  }

  void structure() {
    const json& sec = section("structure");
    const Rational window = scalar(sec, "window", "3").real();
    const Rational box = scalar(sec, "box", "6").real();
    for (const auto& c : sec.value("cases", json::array())) {
      const IntermediateSpec spec{scalar(c, "a", "0"), group(text(c, "group", ""))};
      std::vector<WeightKey> seeds;
      std::string seed_text;
      for (const auto& s : strings(c.value("seeds", json::array()), "structure.seeds")) {
        const WeightVector v = parse_weight_vector(s);
        for (const auto& [k, coef] : v.terms()) {
          seeds.push_back(k);
        }
        seed_text += s + " ";
      }
      const std::string expect = text(c, "expect", "full");
      record("submodule",
             {{"module", spec.to_string()}, {"seeds", seed_text}, {"expect", expect},
              {"window", window.get_str()}, {"box", box.get_str()}},
             [&]() {
               const auto report = submodule_analysis(spec, seeds, window_operators(*spec.group, window), box);
               const std::string found = report.classification + " (" + std::to_string(report.closure.size()) +
                                         " of " + std::to_string(report.region.size()) + ")";
               return report.classification == expect ? pass(found) : fail(found);
             });
    }
  }

  void orbit() {
    const json& sec = section("orbit");
    const Rational window = scalar(sec, "window", "2").real();
    const std::size_t rounds = sec.value("rounds", 3UL);
    for (const auto& c : sec.value("cases", json::array())) {
      const IntermediateSpec spec{scalar(c, "a", "0"), group(text(c, "group", ""))};
      const GaussianRational k = scalar(c, "start", "0");
      record("coset", {{"module", spec.to_string()}, {"start", k.to_string()}, {"rounds", std::to_string(rounds)}},
             [&]() {
               return orbit_lattice_check(spec, k, window_operators(*spec.group, window), rounds)
                          ? pass()
                          : fail("left " + k.to_string() + " + group");
             });
    }
  }

  const json& config_;
  Report& report_;
  unsigned long long seed_ = 1;
  std::mt19937_64 rng_;
  std::map<std::string, GroupPtr> groups_;
  std::vector<NamedModule> modules_;
  std::string suite_;
};

}  // namespace

Report run_verification(std::string_view config_json, const std::vector<std::string>& suites) {
  json config;
  try {
    config = json::parse(config_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("config: ") + e.what());
  }
  if (!config.is_object()) {
    throw Error(ErrorCode::parse_error, "config: top level must be an object");
  }
  std::vector<std::string> selected = suites;
  if (selected.empty() && config.contains("suites")) {
    for (const auto& s : config["suites"]) {
      if (!s.is_string()) {
        throw Error(ErrorCode::parse_error, "config: suites must be strings");
      }
      selected.push_back(s.get<std::string>());
    }
  }
  std::string unknown;
  for (const auto& s : selected) {
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end()) {
      unknown += (unknown.empty() ? "" : ", ") + s;
    }
  }
  if (!unknown.empty()) {
    throw Error(ErrorCode::invalid_argument, "unknown suite(s): " + unknown);
  }
  Report report;
  try {
    Runner runner(config, report);
    report.header = runner.header(selected).dump();
    for (const auto& s : selected) {
      runner.run(s);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("config: ") + e.what());
  }
  return report;
}

}  // namespace wittmod
