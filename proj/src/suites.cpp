#include "gwalab/suites.hpp"

#include <algorithm>
#include <exception>

#include "gwalab/errors.hpp"
#include "gwalab/expr.hpp"
#include "gwalab/nccalc.hpp"
#include "gwalab/pipeline.hpp"

namespace gwalab {

bool SuiteReport::pass() const {
  return !tallies.empty() && std::all_of(tallies.begin(), tallies.end(), [](const Tally& t) { return t.pass(); });
}

void SuiteReport::merge(const Report& trial_report, std::size_t trial) {
  for (const CheckResult& c : trial_report.checks) {
    auto it = std::find_if(tallies.begin(), tallies.end(), [&](const Tally& t) { return t.name == c.name; });
    if (it == tallies.end()) {
      tallies.push_back(Tally{c.name, c.anchor, 0, 0, std::nullopt});
      it = std::prev(tallies.end());
    }
    if (c.pass) {
      ++it->passed;
    } else {
      ++it->failed;
      if (!it->first_failure) it->first_failure = trial;
    }
  }
}

namespace {

Report guarded(const Trial& trial, std::size_t i, std::uint64_t seed) {
  Sampler s(trial_seed(seed, i));
  try {
    return trial(s, i);
  } catch (const std::exception& e) {
    return Report{{{"trial completed without error", e.what(), false}}};
  }
}

}  // namespace

SuiteReport run_trials(const std::string& suite, std::uint64_t seed, std::size_t trials, const Trial& trial) {
  std::vector<Report> reports(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < trials; ++i) reports[i] = guarded(trial, i, seed);
  SuiteReport r{suite, seed, trials, {}};
  for (std::size_t i = 0; i < trials; ++i) r.merge(reports[i], i);
  return r;
}

SuiteReport run_trials_serial(const std::string& suite, std::uint64_t seed, std::size_t trials,
                              const Trial& trial) {
  SuiteReport r{suite, seed, trials, {}};
  for (std::size_t i = 0; i < trials; ++i) r.merge(guarded(trial, i, seed), i);
  return r;
}

namespace {

std::size_t or_default(std::size_t v, std::size_t d) { return v == 0 ? d : v; }
int or_default(int v, int d) { return v == 0 ? d : v; }

void check(Report& r, std::string name, std::string anchor, bool pass) {
  r.checks.push_back({std::move(name), std::move(anchor), pass});
}

void append(Report& r, const Report& more) { r.checks.insert(r.checks.end(), more.checks.begin(), more.checks.end()); }

const Poly4 kOne = Poly4(1);

}  // namespace

SuiteReport calculus_suite(const SuiteOptions& o) {
  const int deg = or_default(o.max_degree, 4);
  return run_trials("calculus", o.seed, or_default(o.trials, std::size_t{50}), [deg](Sampler& s, std::size_t) {
    const AutWord sigma = s.word(3);
    const Poly2 phi = s.poly(deg);
    const Poly2 g = s.poly(deg);
    Report r;
    const Poly4 dz1 = nc_diff(z1());
    const Poly4 dz2 = nc_diff(z2());
    check(r, "total derivative", "d g = Δ₁(g)d z₁ + Δ₂(g)d z₂",
          nc_diff(g) == delta(g, 1) * dz1 + delta(g, 2) * dz2);
    for (int i = 1; i <= 2; ++i) {
      const Poly2& f = i == 1 ? sigma.f1() : sigma.f2();
      const std::string zi = "z" + std::to_string(i);
      check(r, "twisted differential of " + zi, "^σd^σ zᵢ = Δ₁(fᵢ)d z₁ + Δ₂(fᵢ)d z₂",
            twisted_diff(i, 1, 1, sigma) == delta(f, 1) * dz1 + delta(f, 2) * dz2);
      check(r, "mu delta " + zi, "μΔᵢ = ∂/∂zᵢ", mu(delta(g, i)) == partial(g, i));
    }
    const Poly2 jnc = mu(nc_jacobian(sigma));
    check(r, "mu of noncommutative jacobian", "μ(J_nc) = J", jnc == Poly2(sigma.jacobian()));

    const TwistLabel id{};
    const TwistLabel s1{Twist::Sigma};
    struct Part {
      const char* anchor;
      TwistLabel u;
      bool sigma_right;
      int l;
      int r;
    };
    const Part parts[] = {
        {"Δᵢ(φ) − Δᵢ^{∂ᵢ}(φ)d zᵢ = 1⊗φᵢ", id, false, 0, 0},
        {"^σΔᵢ(φ) − ^σΔᵢ^{∂ᵢ}(φ)·^σd zᵢ = 1⊗φᵢ", s1, false, 1, 0},
        {"Δᵢ^σ(φ) − Δᵢ^{σ∂ᵢ}(φ)·d^σ zᵢ = 1⊗σ(φᵢ)", id, true, 0, 1},
        {"^σΔᵢ^σ(φ) − ^σΔᵢ^{σ∂ᵢ}(φ)·^σd^σ zᵢ = 1⊗σ(φᵢ)", s1, true, 1, 1},
    };
    for (int i = 1; i <= 2; ++i) {
      const Twist di = i == 1 ? Twist::Partial1 : Twist::Partial2;
      const Poly2 phi_i = partial(phi, i);
      for (std::size_t k = 0; k < std::size(parts); ++k) {
        const Part& p = parts[k];
        const TwistLabel v = p.sigma_right ? s1 : id;
        const TwistLabel vd = p.sigma_right ? TwistLabel{Twist::Sigma, di} : TwistLabel{di};
        const Poly4 lhs = twisted_delta(phi, i, p.u, v, sigma) -
                          twisted_delta(phi, i, p.u, vd, sigma) * twisted_diff(i, p.l, p.r, sigma);
        const Poly4 rhs = right(p.sigma_right ? sigma.apply(phi_i) : phi_i);
        const std::string label = "delta partial " + std::to_string(k + 1) + " (i=" + std::to_string(i) + ")";
        check(r, label, p.anchor, lhs == rhs);
        if (i == 2) {
          // With Δ₂ keeping z₁ on the left factor the i=2 case carries an extra Δ₁(φ₂)d z₁ term.
          const Poly4 extra = twisted_delta(phi_i, 1, p.u, v, sigma) * twisted_diff(1, p.l, p.r, sigma);
          check(r, label + " with d z1 correction", std::string(p.anchor) + " + (u⊗v)(Δ₁(φ₂))·(twisted d z₁)",
                lhs == rhs + extra);
        }
      }
    }
    return r;
  });
}

Report homotopy_checks(const GwaAlgebra& w, int depth) {
  const DifferentialSet ds(w, depth);
  Report r = verify_homotopy(ds);
  append(r, total_d_squared(ds));
  const Poly2& phi = w.phi();
  const Poly2& sphi = w.sigma_phi();
  const EnvMatrix want_h{{EnvElem(right(phi) - left(phi))}, {EnvElem(right(sphi) - left(sphi))}};
  const EnvMatrix want_t{{EnvElem(left(phi) - right(phi))}, {EnvElem(left(sphi) - right(sphi))}};
  check(r, "worked product d^h00 d^h10", "column (1⊗φ−φ⊗1, 1⊗σ(φ)−σ(φ)⊗1)",
        compose(w, ds.dh(0, 0), ds.dh(1, 0)) == want_h);
  check(r, "worked product d^v00 t01", "column (φ⊗1−1⊗φ, σ(φ)⊗1−1⊗σ(φ))",
        compose(w, ds.dv(0, 0), ds.t(0, 1)) == want_t);
  return r;
}

SuiteReport homotopy_suite(const SuiteOptions& o) {
  const int deg = or_default(o.max_degree, 3);
  const int depth = o.depth;
  return run_trials("homotopy", o.seed, or_default(o.trials, std::size_t{20}), [=](Sampler& s, std::size_t) {
    const AutWord sigma = s.word(3, Sampler::WordStyle::Triangular);
    const Poly2 phi = s.nonzero_poly(deg);
    return homotopy_checks(GwaAlgebra(sigma, phi), depth);
  });
}

namespace {

struct Fixture {
  const char* phi;
  bool smooth;
};
const Fixture kFixtures[] = {
    {"z1^2 + z2^2 - 1", true}, {"z1 + 5", true}, {"z1^2", false}, {"z1*z2", false}, {"0", false}};

}  // namespace

SuiteReport smoothness_suite(const SuiteOptions& o) {
  const std::size_t sigmas = or_default(o.trials, std::size_t{5});
  const std::size_t n = std::size(kFixtures);
  // Trial k handles fixture k with `sigmas` random words; verdicts are compared inside the trial.
  return run_trials("smoothness", o.seed, n, [sigmas](Sampler& s, std::size_t k) {
    const Fixture& f = kFixtures[k];
    const Poly2 phi = parse_poly(f.phi);
    Report r;
    const std::string tag = "phi = " + std::string(f.phi);
    std::optional<bool> first;
    bool independent = true;
    for (std::size_t j = 0; j < sigmas; ++j) {
      const GwaAlgebra w(s.word(3), phi);
      const SmoothVerdict v = smoothness_test(w);
      if (!first) first = v.smooth;
      independent = independent && *first == v.smooth;
      check(r, "verdict " + tag, "(φ, φ₁, φ₂) = B iff smooth", v.smooth == f.smooth);
      if (v.smooth) {
        check(r, "certificate " + tag, "αφ + β₁φ₁ + β₂φ₂ = 1",
              v.certificate && verify_certificate(*v.certificate, phi));
      }
    }
    check(r, "sigma independence " + tag, "for any σ", independent);
    return r;
  });
}

std::vector<GwaAlgebra> builtin_smooth_instances() {
  return {GwaAlgebra(AutWord::identity(), parse_poly("z1^2 + z2^2 - 1")),
          GwaAlgebra(parse_sigma("affine([[2,0],[0,3]],[0,0])"), parse_poly("z1 + 5")),
          GwaAlgebra(parse_sigma("elem1(z2^2 - 1); affine([[1,1],[0,2]],[1,0])"), parse_poly("z1*z2 + 1"))};
}

SuiteReport roundtrip_suite(const SuiteOptions& o, const std::vector<GwaAlgebra>& given) {
  const std::vector<GwaAlgebra> instances = given.empty() ? builtin_smooth_instances() : given;
  struct Prepared {
    std::shared_ptr<CochainComplex> complex;
    std::optional<Certificate> cert;
  };
  std::vector<Prepared> prepared;
  for (const auto& w : instances) {
    prepared.push_back({std::make_shared<CochainComplex>(w), smoothness_test(w).certificate});
  }
  return run_trials("roundtrip", o.seed, or_default(o.trials, std::size_t{20}), [prepared](Sampler& s, std::size_t i) {
    const Prepared& p = prepared[i % prepared.size()];
    Report r;
    if (!p.cert) {
      check(r, "instance is smooth", "(φ, φ₁, φ₂) = B", false);
      return r;
    }
    const Cochain3 n = s.cochain3();
    const Cochain4 m = p.complex->cochain_d3(n);
    const Report cocycle = p.complex->is_cocycle4(m);
    check(r, "d n' is a cocycle", "m = d n′ satisfies the eight cocycle equations", cocycle.all_pass());
    const Cochain3 built = p.complex->build_n(*p.cert, m);
    check(r, "coboundary round trip", "d(build_n(m)) = m", p.complex->cochain_d3(built) == m);
    return r;
  });
}

SuiteReport nakayama_suite(const SuiteOptions& o, const std::optional<GwaAlgebra>& instance) {
  const int deg = or_default(o.max_degree, 2);
  const std::size_t trials = or_default(o.trials, std::size_t{50});
  SuiteReport r = run_trials("nakayama", o.seed, trials, [=](Sampler& s, std::size_t i) {
    const GwaAlgebra w = instance ? *instance : GwaAlgebra(s.word(2, Sampler::WordStyle::Triangular), s.poly(deg));
    Report rep;
    const GwaElem u = s.element(2, deg);
    const GwaElem v = s.element(2, deg);
    check(rep, "nu multiplicative", "ν(uv) = ν(u)ν(v)",
          nakayama_apply(w, multiply(w, u, v)) == multiply(w, nakayama_apply(w, u), nakayama_apply(w, v)));
    check(rep, "nu relation yx", "ν(y)ν(x) = ν(φ)",
          multiply(w, nakayama_apply(w, GwaElem::y()), nakayama_apply(w, GwaElem::x())) ==
              nakayama_apply(w, GwaElem(w.phi())));
    if (i < 20) {
      const E12Class c = s.canonical_class();
      const GwaElem phi_c = phi_map(w, c);
      for (Generator g : {Generator::X, Generator::Y, Generator::Z1, Generator::Z2}) {
        const GwaElem e = generator_elem(g);
        const E12Class rc = bimodule_action(w, c, g, Side::Right);
        const E12Class lc = bimodule_action(w, c, g, Side::Left);
        check(rep, "Phi right " + to_string(g), "Φ(ȳ◁w) = Φ(ȳ)ν(w)",
              rc.is_canonical() && phi_map(w, rc) == multiply(w, phi_c, nakayama_apply(w, e)));
        check(rep, "Phi left " + to_string(g), "Φ(w▷ȳ) = wΦ(ȳ)",
              lc.is_canonical() && phi_map(w, lc) == multiply(w, e, phi_c));
      }
    }
    return rep;
  });
  if (!instance) {
    const auto smooth = builtin_smooth_instances();
    Report cy;
    for (const auto& w : smooth) {
      const AnalysisReport a = analyze(w);
      check(cy, "Calabi-Yau iff J = 1 (J = " + to_string(a.jacobian) + ")", "Calabi-Yau iff (φ,φ₁,φ₂)=B and J=1",
            a.verdict.smooth && a.calabi_yau == (a.jacobian == 1));
    }
    r.merge(cy, trials);
  }
  return r;
}

SuiteReport witness_suite(const SuiteOptions& o) {
  const std::size_t sigmas = or_default(o.trials, std::size_t{3});
  const char* phis[] = {"z1^2", "z1*z2", "0"};
  return run_trials("witness", o.seed, std::size(phis), [&phis, sigmas](Sampler& s, std::size_t k) {
    const Poly2 phi = parse_poly(phis[k]);
    const std::string tag = "phi = " + std::string(phis[k]);
    Report r;
    for (std::size_t j = 0; j < sigmas; ++j) {
      const AnalysisReport a = analyze(GwaAlgebra(s.word(3), phi), std::make_pair(Rational(0), Rational(0)));
      check(r, "not smooth " + tag, "(φ, φ₁, φ₂) ≠ B", !a.verdict.smooth);
      check(r, "infinite global dimension " + tag, "W has infinite global dimension", a.infinite_global_dimension);
      if (phi.is_zero()) {
        check(r, "zero phi short circuit", "if φ = 0, infinite global dimension", !a.witness.has_value());
        continue;
      }
      const bool chain = a.witness.has_value();
      check(r, "epsilon annihilation " + tag, "(ε_m⊗ε_m)(Δ₁(φ)) = (ε_m⊗ε_m)(Δ₂(φ)) = 0",
            chain && a.witness->epsilon.pass);
      check(r, "4-cycle " + tag, "t₂₁(1̄⊗1̄,0) = 0 and d^h₃₀(1̄⊗1̄,0) = 0", chain && a.witness->cycle.pass);
      check(r, "not a boundary " + tag, "(1̄⊗1̄,0) is not a boundary",
            chain && a.witness->boundary.pass && a.witness->boundary.degree_zero_rank == 0);
    }
    return r;
  });
}

}  // namespace gwalab
