#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "ququart/density.hpp"
#include "ququart/measures.hpp"
#include "ququart/states.hpp"

using namespace ququart;

namespace {

DensityMatrix pol_block(const MixedCoeffs& mc) {
  return partial_trace_frequency(pure_density(ququart_state(from_mixed_coeffs(mc))));
}

DensityMatrix freq_block(const MixedCoeffs& mc) {
  return partial_trace_polarization(pure_density(ququart_state(from_mixed_coeffs(mc))));
}

MixedCoeffs sample_mixed() {
  return MixedCoeffs::make(cx(0.4, 0.2), cx(0.1, -0.5), cx(-0.3, 0.1), std::sqrt(0.44));
}

DensityMatrix density_from(const std::array<cx, 16>& entries, BasisTag tag) {
  CMat m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = entries[static_cast<std::size_t>(4 * i + j)];
  return DensityMatrix(std::move(m), tag);
}

}  // namespace

TEST_CASE("xlog2 conventions") {
  CHECK(xlog2(0.0) == 0.0);
  CHECK(xlog2(1.0) == 0.0);
  CHECK(xlog2(0.5) == Catch::Approx(-0.5).margin(1e-15));
}

TEST_CASE("hermitian_eigenvalues rejects indefinite blocks") {
  CMat m(2);
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  const DensityMatrix rho(std::move(m), BasisTag::Natural);
  CHECK_THROWS_AS(hermitian_eigenvalues(rho), DomainError);
}

TEST_CASE("entropy reference values") {
  // Pinned to 20-digit evaluations of -sum(p log2 p).
  CHECK(von_neumann_entropy(Spectrum{{0.64, 0.36}}) ==
        Catch::Approx(0.94268318925549224509).margin(1e-15));
  CHECK(von_neumann_entropy(Spectrum{{0.75, 0.25}}) ==
        Catch::Approx(0.81127812445913286391).margin(1e-15));
  CHECK(von_neumann_entropy(Spectrum{{1.0, 0.0}}) == 0.0);
  CHECK(von_neumann_entropy(Spectrum{{0.5, 0.5}}) == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("schmidt parameter of simple spectra") {
  CHECK(schmidt_parameter(Spectrum{{1.0, 0.0}}) == Catch::Approx(1.0).margin(1e-15));
  CHECK(schmidt_parameter(Spectrum{{0.5, 0.5}}) == Catch::Approx(2.0).margin(1e-15));
  CHECK(schmidt_parameter(Spectrum{{0.25, 0.25, 0.25, 0.25}}) ==
        Catch::Approx(4.0).margin(1e-15));
}

TEST_CASE("mutual information overloads agree") {
  CHECK(mutual_information(0.9, 0.7) == Catch::Approx(0.5).margin(1e-15));
  CHECK(mutual_information(0.7, 0.7, 0.9) == Catch::Approx(0.5).margin(1e-15));

  // Frequency block at |B-|^2 = 0.36: both reductions are maximally mixed, so
  // I = 2 - S(0.64, 0.36).
  const MixedCoeffs mc = MixedCoeffs::make(0.8, 0.0, 0.0, 0.6);
  const DensityMatrix freq = freq_block(mc);
  CHECK(mutual_information(freq) == Catch::Approx(1.0573168107445077549).margin(1e-12));

  const Spectrum spec = hermitian_eigenvalues(freq);
  const std::array<double, 4> want{0.64, 0.36, 0.0, 0.0};
  for (int k = 0; k < 4; ++k)
    CHECK(spec.values[static_cast<std::size_t>(k)] ==
          Catch::Approx(want[static_cast<std::size_t>(k)]).margin(1e-12));
}

TEST_CASE("schmidt decomposition") {
  SECTION("|HH> has two equal weights") {
    const SchmidtDecomposition d = schmidt_decompose(basis_state(BasisLabel::HH));
    REQUIRE(d.modes.size() == 2);
    CHECK(d.degenerate);
    CHECK(d.spectrum[0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(d.spectrum[1] == Catch::Approx(0.5).margin(1e-12));
    CHECK(d.schmidt_parameter() == Catch::Approx(2.0).margin(1e-11));
  }
  SECTION("a product vector has a single mode") {
    std::array<cx, 16> a{};
    a[pair_index(0, 1)] = 1.0;  // |Hh> (x) |Hl>, deliberately asymmetric
    const SchmidtDecomposition d = schmidt_decompose(PureBiphotonState::from_raw(a, false));
    REQUIRE(d.modes.size() == 1);
    CHECK_FALSE(d.degenerate);
    CHECK(d.modes[0].lambda == Catch::Approx(1.0).margin(1e-12));
    CHECK(d.schmidt_parameter() == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("double-Bell states are maximally entangled") {
    const SchmidtDecomposition d = schmidt_decompose(double_bell_state(DoubleBell::PsiMinus));
    REQUIRE(d.modes.size() == 4);
    CHECK(d.degenerate);
    for (const SchmidtMode& m : d.modes) CHECK(m.lambda == Catch::Approx(0.25).margin(1e-12));
    CHECK(d.schmidt_parameter() == Catch::Approx(4.0).margin(1e-10));
  }
  SECTION("modes reconstruct the state and are orthonormal") {
    const PureBiphotonState psi = ququart_state(from_mixed_coeffs(sample_mixed()));
    const SchmidtDecomposition d = schmidt_decompose(psi);
    double weight = 0.0;
    for (const SchmidtMode& m : d.modes) weight += m.lambda;
    CHECK(weight == Catch::Approx(1.0).margin(1e-11));

    for (std::size_t a = 0; a < d.modes.size(); ++a)
      for (std::size_t b = 0; b < d.modes.size(); ++b) {
        cx o1 = 0.0, o2 = 0.0;
        for (int i = 0; i < 4; ++i) {
          o1 += std::conj(d.modes[a].photon1[static_cast<std::size_t>(i)]) * d.modes[b].photon1[static_cast<std::size_t>(i)];
          o2 += std::conj(d.modes[a].photon2[static_cast<std::size_t>(i)]) * d.modes[b].photon2[static_cast<std::size_t>(i)];
        }
        const cx want = a == b ? cx(1.0) : cx(0.0);
        CHECK(std::abs(o1 - want) < 1e-10);
        CHECK(std::abs(o2 - want) < 1e-10);
      }

    double defect = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cx acc = 0.0;
        for (const SchmidtMode& m : d.modes)
          acc += std::sqrt(m.lambda) * m.photon1[static_cast<std::size_t>(i)] * m.photon2[static_cast<std::size_t>(j)];
        defect = std::max(defect, std::abs(acc - psi.amplitude(i, j)));
      }
    CHECK(defect < 1e-10);
  }
}

TEST_CASE("spin flip") {
  SECTION("the singlet is invariant") {
    const cx s = inv_sqrt2;
    const std::array<cx, 4> psim{0.0, s, -s, 0.0};
    std::array<cx, 16> e{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        e[static_cast<std::size_t>(4 * i + j)] = psim[static_cast<std::size_t>(i)] * std::conj(psim[static_cast<std::size_t>(j)]);
    const DensityMatrix rho = density_from(e, BasisTag::Natural);
    CHECK(spin_flip(rho).mat().max_abs_diff(rho.mat()) < 1e-15);
  }
  SECTION("corner projectors swap corners") {
    std::array<cx, 16> e{};
    e[0] = 1.0;
    const DensityMatrix rho = density_from(e, BasisTag::Natural);
    const DensityMatrix flipped = spin_flip(rho);
    CHECK(flipped.mat()(3, 3) == cx(1.0));
    CHECK(std::abs(flipped.mat()(0, 0)) == 0.0);
  }
}

TEST_CASE("concurrence") {
  SECTION("the singlet has concurrence one, white noise zero") {
    const cx s = inv_sqrt2;
    const std::array<cx, 4> psim{0.0, s, -s, 0.0};
    std::array<cx, 16> e{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        e[static_cast<std::size_t>(4 * i + j)] = psim[static_cast<std::size_t>(i)] * std::conj(psim[static_cast<std::size_t>(j)]);
    CHECK(wootters_concurrence(density_from(e, BasisTag::Natural)) ==
          Catch::Approx(1.0).margin(1e-11));

    std::array<cx, 16> id{};
    for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(5 * i)] = 0.25;
    CHECK(wootters_concurrence(density_from(id, BasisTag::Natural)) == 0.0);
  }
  SECTION("frequency block at |B-|^2 = 0.25") {
    const MixedCoeffs mc = MixedCoeffs::make(std::sqrt(0.75), 0.0, 0.0, 0.5);
    CHECK(wootters_concurrence(freq_block(mc)) == Catch::Approx(0.5).margin(1e-11));
    CHECK(concurrence_freq_closed(mc) == Catch::Approx(0.5).margin(1e-15));
  }
  SECTION("polarization block routes agree on a generic state") {
    const MixedCoeffs mc = sample_mixed();
    const double c_closed = concurrence_pol_closed(mc);
    CHECK(wootters_concurrence(pol_block(mc)) == Catch::Approx(c_closed).margin(1e-10));
  }
  SECTION("Wootters numbers of the polarization block") {
    const MixedCoeffs mc = sample_mixed();
    const double b2 = std::norm(mc.b_minus);
    const double q = std::abs(2.0 * mc.c1 * mc.c4 - mc.b_plus * mc.b_plus);
    std::array<double, 4> want{q, b2, 0.0, 0.0};
    std::sort(want.begin(), want.end(), std::greater<>());
    const std::array<double, 4> got = wootters_numbers(pol_block(mc));
    for (int k = 0; k < 4; ++k)
      CHECK(got[static_cast<std::size_t>(k)] ==
            Catch::Approx(want[static_cast<std::size_t>(k)]).margin(1e-10));
  }
}

TEST_CASE("closed forms of the polarization block") {
  const MixedCoeffs mc = sample_mixed();
  const ClosedForms cf = closed_forms(mc);
  const double b2 = std::norm(mc.b_minus);
  const double q = std::abs(2.0 * mc.c1 * mc.c4 - mc.b_plus * mc.b_plus);
  const double rad = (1.0 - b2) * (1.0 - b2) - q * q;
  CHECK(cf.lambda_plus == Catch::Approx((1.0 + std::sqrt(rad)) / 2.0).margin(1e-14));
  CHECK(cf.lambda_minus == Catch::Approx((1.0 - std::sqrt(rad)) / 2.0).margin(1e-14));
  CHECK(cf.k_pol == Catch::Approx(2.0 / (1.0 + rad)).margin(1e-14));
  CHECK(cf.c_pol == Catch::Approx(std::abs(q - b2)).margin(1e-14));
  CHECK(cf.spectrum_full[0] == Catch::Approx(std::max(1.0 - b2, b2)).margin(1e-14));
  CHECK(cf.spectrum_full[1] == Catch::Approx(std::min(1.0 - b2, b2)).margin(1e-14));
  CHECK(cf.spectrum_full[2] == 0.0);
  CHECK(cf.spectrum_full[3] == 0.0);

  SECTION("numerical spectrum of the block matches") {
    const Spectrum spec = hermitian_eigenvalues(pol_block(mc));
    CHECK(spec.values[0] == Catch::Approx(cf.spectrum_full[0]).margin(1e-11));
    CHECK(spec.values[1] == Catch::Approx(cf.spectrum_full[1]).margin(1e-11));
    CHECK(std::abs(spec.values[2]) + std::abs(spec.values[3]) < 1e-11);
  }
  SECTION("an impossible coefficient set is rejected") {
    // Unnormalized on purpose: the radicand goes negative.
    CHECK_THROWS_AS(closed_forms(MixedCoeffs{1.0, 2.0, 1.0, 0.0}), DomainError);
  }
}

TEST_CASE("relative entropy of entanglement for Bell-diagonal blocks") {
  CHECK(relative_entropy_bell_diagonal(0.5) ==
        Catch::Approx(0.18872187554086713609).margin(1e-15));
  CHECK(relative_entropy_bell_diagonal(0.0) == 0.0);
  CHECK(relative_entropy_bell_diagonal(1.0) == Catch::Approx(1.0).margin(1e-15));
  CHECK_THROWS_AS(relative_entropy_bell_diagonal(1.5), DomainError);
  CHECK_THROWS_AS(relative_entropy_bell_diagonal(-0.5), DomainError);
}

TEST_CASE("two-Bell mixture detection") {
  SECTION("frequency blocks qualify") {
    const MixedCoeffs mc = MixedCoeffs::make(0.8, 0.0, 0.0, 0.6);
    const auto c = two_bell_mixture_concurrence(freq_block(mc));
    REQUIRE(c.has_value());
    CHECK(*c == Catch::Approx(std::abs(1.0 - 2.0 * 0.36)).margin(1e-11));
  }
  SECTION("generic polarization blocks do not") {
    CHECK_FALSE(two_bell_mixture_concurrence(pol_block(sample_mixed())).has_value());
  }
  SECTION("three Bell components do not") {
    std::array<cx, 16> e{};
    e[0] = 0.5;
    e[5] = 0.3;
    e[10] = 0.2;
    const DensityMatrix rho = density_from(e, BasisTag::BellPol);
    CHECK_FALSE(two_bell_mixture_concurrence(rho).has_value());
  }
  SECTION("a pure Bell state gives one") {
    std::array<cx, 16> e{};
    e[0] = 1.0;
    const auto c = two_bell_mixture_concurrence(density_from(e, BasisTag::BellPol));
    REQUIRE(c.has_value());
    CHECK(*c == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("Stokes vector and degree of polarization") {
  SECTION("pure H is fully polarized along xi3") {
    CMat m(2);
    m(0, 0) = 1.0;
    const StokesVector s = stokes_vector(DensityMatrix(std::move(m), BasisTag::Natural));
    CHECK(s.xi1 == 0.0);
    CHECK(s.xi2 == 0.0);
    CHECK(s.xi3 == Catch::Approx(1.0).margin(1e-15));
    CHECK(degree_of_polarization(s) == Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("the maximally mixed qubit is unpolarized") {
    CMat m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    CHECK(degree_of_polarization(DensityMatrix(std::move(m), BasisTag::Natural)) == 0.0);
  }
  SECTION("off-diagonal terms map to xi1 and xi2") {
    CMat m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = cx(0.3, 0.1);
    m(1, 0) = cx(0.3, -0.1);
    const StokesVector s = stokes_vector(DensityMatrix(std::move(m), BasisTag::Natural));
    CHECK(s.xi1 == Catch::Approx(0.6).margin(1e-15));
    CHECK(s.xi2 == Catch::Approx(-0.2).margin(1e-15));
    CHECK(s.xi3 == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("only 2x2 blocks are accepted") {
    CHECK_THROWS_AS(stokes_vector(pol_block(sample_mixed())), DimensionError);
  }
}

TEST_CASE("correlation report") {
  SECTION("frequency block carries the Bell-diagonal extras") {
    const MixedCoeffs mc = MixedCoeffs::make(std::sqrt(0.75), 0.0, 0.0, 0.5);
    const CorrelationReport r = build_correlation_report(freq_block(mc));
    CHECK(r.schmidt_k == Catch::Approx(2.0).margin(1e-11));
    CHECK(r.entropy_reduced == Catch::Approx(1.0).margin(1e-12));
    CHECK(r.entropy_full == Catch::Approx(0.81127812445913286391).margin(1e-12));
    CHECK(r.mutual_info == Catch::Approx(1.1887218755408671361).margin(1e-12));
    CHECK(r.concurrence == Catch::Approx(0.5).margin(1e-11));
    CHECK(r.polarization_degree == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(r.rel_entropy.has_value());
    REQUIRE(r.classical_corr.has_value());
    CHECK(*r.rel_entropy == Catch::Approx(0.18872187554086713609).margin(1e-12));
    CHECK(*r.classical_corr == Catch::Approx(1.0).margin(1e-11));
  }
  SECTION("polarization block matches its closed forms") {
    const MixedCoeffs mc = sample_mixed();
    const ClosedForms cf = closed_forms(mc);
    const CorrelationReport r = build_correlation_report(pol_block(mc));
    CHECK(r.schmidt_k == Catch::Approx(cf.k_pol).margin(1e-10));
    CHECK(r.concurrence == Catch::Approx(cf.c_pol).margin(1e-10));
    CHECK(r.entropy_full ==
          Catch::Approx(-xlog2(cf.spectrum_full[0]) - xlog2(cf.spectrum_full[1])).margin(1e-10));
    CHECK(r.entropy_reduced ==
          Catch::Approx(-xlog2(cf.lambda_plus) - xlog2(cf.lambda_minus)).margin(1e-10));
    // Purity relation between polarization degree and the Schmidt parameter.
    CHECK(r.polarization_degree * r.polarization_degree + 2.0 * (1.0 - 1.0 / r.schmidt_k) ==
          Catch::Approx(1.0).margin(1e-10));
    CHECK_FALSE(r.rel_entropy.has_value());
    CHECK_FALSE(r.classical_corr.has_value());
  }
  SECTION("the correlated-state tag is rejected") {
    CHECK_THROWS_AS(build_correlation_report(ququart_density_4x4(sample_mixed())),
                    DimensionError);
  }
}
