#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ququart/eig.hpp"
#include "ququart/matrix.hpp"

using namespace ququart;

namespace {

double residual_to_reference(const CMat& a) {
  const std::vector<double> got = eigenvalues_hermitian(a);
  const std::vector<double> want = oracles::eigenvalues_reference(a);
  double d = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) d = std::max(d, std::abs(got[k] - want[k]));
  return d;
}

double decomposition_defect(const CMat& a) {
  const EigResult e = eig_hermitian(a);
  const int n = a.dim();
  // A V - V diag(values)
  CMat av = a * e.vectors;
  double d = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      d = std::max(d, std::abs(av(i, k) - e.values[static_cast<std::size_t>(k)] * e.vectors(i, k)));
  // orthonormality
  const CMat g = e.vectors.adjoint() * e.vectors;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d = std::max(d, std::abs(g(i, j) - (i == j ? cx(1.0) : cx(0.0))));
  return d;
}

}  // namespace

TEST_CASE("2x2 closed form on a known matrix") {
  CMat a(2);
  a(0, 0) = 2.0;
  a(1, 1) = 2.0;
  a(0, 1) = cx(0.0, 1.0);
  a(1, 0) = cx(0.0, -1.0);
  const auto vals = eigenvalues_hermitian(a);
  CHECK(vals[0] == Catch::Approx(3.0).margin(1e-14));
  CHECK(vals[1] == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("diagonal matrices are fixed points") {
  CMat a(4);
  a(0, 0) = 0.7;
  a(1, 1) = 0.3;
  const auto vals = eigenvalues_hermitian(a);
  CHECK(vals[0] == Catch::Approx(0.7).margin(1e-15));
  CHECK(vals[1] == Catch::Approx(0.3).margin(1e-15));
  CHECK(vals[2] == Catch::Approx(0.0).margin(1e-15));
  CHECK(vals[3] == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("random Hermitian matrices match the characteristic-polynomial oracle") {
  oracles::Rand rng(7u);
  for (int dim : {2, 3, 4}) {
    for (int rep = 0; rep < 50; ++rep) {
      const CMat a = oracles::random_hermitian(rng, dim);
      INFO("dim=" << dim << " rep=" << rep);
      CHECK(residual_to_reference(a) < 1e-10);
    }
  }
}

TEST_CASE("random density matrices match the oracle and decompose cleanly") {
  oracles::Rand rng(11u);
  for (int rep = 0; rep < 50; ++rep) {
    const CMat rho = oracles::random_density(rng, 4);
    INFO("rep=" << rep);
    CHECK(residual_to_reference(rho) < 1e-10);
    CHECK(decomposition_defect(rho) < 1e-10);
  }
}

TEST_CASE("16x16 spectrum of a known projector mixture") {
  // Orthonormal columns u_k with weights (0.4, 0.3, 0.2, 0.1): the spectrum
  // is the weights themselves plus twelve zeros.
  oracles::Rand rng(3u);
  CMat b(16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) b(i, j) = rng.c();
  // Gram-Schmidt on the first four columns.
  std::vector<std::vector<cx>> u(4, std::vector<cx>(16));
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 16; ++i) u[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = b(i, k);
    for (int prev = 0; prev < k; ++prev) {
      const cx ov = inner_product(u[static_cast<std::size_t>(prev)], u[static_cast<std::size_t>(k)]);
      for (int i = 0; i < 16; ++i) u[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] -= ov * u[static_cast<std::size_t>(prev)][static_cast<std::size_t>(i)];
    }
    double nrm = 0.0;
    for (const cx& v : u[static_cast<std::size_t>(k)]) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    for (cx& v : u[static_cast<std::size_t>(k)]) v /= nrm;
  }
  const double w[4] = {0.4, 0.3, 0.2, 0.1};
  CMat rho(16);
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        rho(i, j) += w[k] * u[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * std::conj(u[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);

  const auto vals = eigenvalues_hermitian(rho);
  CHECK(vals[0] == Catch::Approx(0.4).margin(1e-11));
  CHECK(vals[1] == Catch::Approx(0.3).margin(1e-11));
  CHECK(vals[2] == Catch::Approx(0.2).margin(1e-11));
  CHECK(vals[3] == Catch::Approx(0.1).margin(1e-11));
  for (int k = 4; k < 16; ++k) CHECK(std::abs(vals[static_cast<std::size_t>(k)]) < 1e-11);
}

TEST_CASE("non-Hermitian input is rejected") {
  CMat a(2);
  a(0, 1) = 0.5;  // a(1,0) left at zero
  CHECK_THROWS_AS(eig_hermitian(a), DomainError);
}

TEST_CASE("hermitian_sqrt squares back") {
  oracles::Rand rng(5u);
  const CMat rho = oracles::random_density(rng, 4);
  const CMat root = hermitian_sqrt(rho);
  CHECK((root * root).max_abs_diff(rho) < 1e-11);
  CHECK(root.hermiticity_defect() < 1e-12);
}

TEST_CASE("hermitian_sqrt rejects indefinite matrices") {
  CMat a(2);
  a(0, 0) = 1.0;
  a(1, 1) = -0.5;
  CHECK_THROWS_AS(hermitian_sqrt(a), DomainError);
}
