#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "qhb/numdiff.hpp"
#include "qhb/qh_bundle.hpp"
#include "qhb/rng.hpp"

using namespace qhb;

TEST_CASE("fiber dimensions") {
  CHECK(fiber_dimension(1, 1) == 2);
  CHECK(fiber_dimension(2, 1) == 3);
  CHECK(fiber_dimension(2, 2) == 6);
  CHECK(fiber_dimension(3, 0) == 1);
  CHECK(fiber_dimension(3, -1) == 4);
  CHECK_THROWS_AS(fiber_dimension(2, -2), UnsupportedPicardClass);
  CHECK_THROWS_AS(fiber_dimension(0, 1), DomainError);
}

TEST_CASE("l=1 transition on CP^1 is diag(1/w, -1/w^2) in (vacuum, excitation) order") {
  const Complex w(0.8, -0.3);
  const AffineCoords a{ChartId{1}, {w}};
  const TransitionMatrix tm = transition_matrix(a, ChartId{2}, 1);
  REQUIRE(tm.matrix.rows == 2);
  CHECK(std::abs(tm.matrix(0, 0) - 1.0 / w) < 1e-15);
  CHECK(std::abs(tm.matrix(1, 1) + 1.0 / (w * w)) < 1e-15);
  CHECK(tm.matrix(0, 1) == Complex(0.0, 0.0));
  CHECK(tm.matrix(1, 0) == Complex(0.0, 0.0));
}

TEST_CASE("transition to the same chart is the identity") {
  Rng rng(51);
  for (const int l : {-1, 0, 1, 2, 3}) {
    const AffineCoords a = rng.affine_point(2, 1.0);
    const TransitionMatrix tm = transition_matrix(a, a.chart, l);
    CHECK(max_abs(tm.matrix - CMat::identity(tm.matrix.rows)) < 1e-12);
  }
}

TEST_CASE("l=1 transitions are exactly block j + t with an invariant vacuum line") {
  Rng rng(52);
  for (int n = 1; n <= 2; ++n)
    for (int rep = 0; rep < 15; ++rep) {
      const ProjectivePoint p = rng.overlap_point(n);
      const ChartId from{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const ChartId to{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const AffineCoords a = to_affine(p, from);
      const TransitionMatrix tm = transition_matrix(a, to, 1);
      CHECK(tm.matrix(0, 0) == transition_factor(a, to, 1));
      const CMat jac = (to == from) ? CMat::identity(static_cast<std::size_t>(n)) : jacobian(a, to);
      for (int r = 0; r < n; ++r) {
        // no mixing between vacuum and excitations, bit-exact
        CHECK(tm.matrix(0, static_cast<std::size_t>(r) + 1) == Complex(0.0, 0.0));
        CHECK(tm.matrix(static_cast<std::size_t>(r) + 1, 0) == Complex(0.0, 0.0));
        for (int c = 0; c < n; ++c)
          CHECK(tm.matrix(static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(c) + 1) ==
                jac(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
      }
    }
}

TEST_CASE("transition cocycle holds for every supported class") {
  Rng rng(53);
  for (int n = 1; n <= 2; ++n)
    for (const int l : {-1, 0, 1, 2, 3}) {
      for (int rep = 0; rep < 8; ++rep) {
        const ProjectivePoint p = rng.overlap_point(n);
        const ChartId i{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const ChartId j{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const ChartId k{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const CMat prod = transition_matrix(to_affine(p, k), i, l).matrix *
                          transition_matrix(to_affine(p, j), k, l).matrix *
                          transition_matrix(to_affine(p, i), j, l).matrix;
        CHECK(max_abs(prod - CMat::identity(prod.rows)) < 1e-9);
      }
    }
}

TEST_CASE("l > 1 transitions have compound dimension and reduce to n+1 at l=1") {
  Rng rng(54);
  const AffineCoords a = rng.affine_point(2, 0.8);
  const TransitionMatrix t2 = transition_matrix(a, ChartId{2}, 2);
  CHECK(t2.matrix.rows == 6);  // binom(4, 2)
  CHECK(std::abs(determinant(t2.matrix)) > 1e-10);
  // dimensions agree with the state counting for l = 1 as well
  CHECK(fiber_dimension(2, 1) == enumerate_states(2, 1).size());
}

TEST_CASE("fiber inner product: values at the origin and chart invariance") {
  const AffineCoords origin{ChartId{1}, {Complex(0.0, 0.0)}};
  QHFiberState vacuum{ChartId{1}, 1, {Complex(1.0, 0.0), Complex(0.0, 0.0)}};
  QHFiberState excited{ChartId{1}, 1, {Complex(0.0, 0.0), Complex(1.0, 0.0)}};
  CHECK(std::abs(fiber_inner_product(vacuum, vacuum, origin) - Complex(1.0, 0.0)) == 0.0);
  CHECK(std::abs(fiber_inner_product(excited, excited, origin) - Complex(1.0, 0.0)) == 0.0);
  CHECK(std::abs(fiber_inner_product(vacuum, excited, origin)) == 0.0);

  QHFiberState wrong_chart = excited;
  wrong_chart.chart = ChartId{2};
  CHECK_THROWS_AS(fiber_inner_product(vacuum, wrong_chart, origin), ChartMismatch);

  Rng rng(55);
  for (int n = 1; n <= 2; ++n)
    for (const int l : {-1, 1, 2}) {
      const std::size_t d = static_cast<std::size_t>(fiber_dimension(n, l));
      for (int rep = 0; rep < 10; ++rep) {
        const ProjectivePoint p = rng.overlap_point(n);
        const ChartId i{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const ChartId j{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const AffineCoords ai = to_affine(p, i);
        const AffineCoords aj = to_affine(p, j);
        QHFiberState s1{i, l, CVec(d)}, s2{i, l, CVec(d)};
        for (std::size_t c = 0; c < d; ++c) {
          s1.amplitudes[c] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
          s2.amplitudes[c] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        const Complex before = fiber_inner_product(s1, s2, ai);
        const CMat m = transition_matrix(ai, j, l).matrix;
        QHFiberState t1{j, l, m * s1.amplitudes}, t2{j, l, m * s2.amplitudes};
        const Complex after = fiber_inner_product(t1, t2, aj);
        CHECK(std::abs(after - before) < 1e-9);
      }
    }
}

TEST_CASE("connection vanishes at the origin and is l-linear on the vacuum block") {
  for (int n = 1; n <= 2; ++n) {
    const AffineCoords origin{ChartId{1}, CVec(static_cast<std::size_t>(n), Complex(0.0, 0.0))};
    for (const int l : {-1, 0, 1, 2}) {
      for (const CMat& m : connection_matrices(origin, l)) CHECK(max_abs(m) == 0.0);
    }
  }
  Rng rng(56);
  const AffineCoords a = rng.affine_point(1, 1.2);
  const auto omega1 = connection_matrices(a, 1);
  const auto omega5 = connection_matrices(a, 5);
  // vacuum entries scale with the twist exponent, tangent parts are shared;
  // for n=1, l=5 the labels {2}..{6} carry pure twist, {1} adds Gamma
  const Complex a1 = chern_connection(a, 1)[0];
  CHECK(std::abs(omega1[0](0, 0) - a1) == 0.0);
  CHECK(std::abs(omega5[0](5, 5) - 5.0 * a1) < 1e-15);
  CHECK(std::abs(omega5[0](0, 0) - (christoffel(a).at(0, 0, 0) + 5.0 * a1)) < 1e-15);
}

TEST_CASE("connection is metric compatible: d_j G = G Omega_j") {
  Rng rng(57);
  for (int n = 1; n <= 2; ++n)
    for (const int l : {-1, 1, 2}) {
      for (int rep = 0; rep < 5; ++rep) {
        const AffineCoords a = rng.affine_point(n, 1.2);
        const CMat gram = fiber_gram(a, l);
        const auto omega = connection_matrices(a, l);
        const std::size_t d = gram.rows;
        for (int dir = 0; dir < n; ++dir) {
          CMat dg(d, d);
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
              auto entry = [&](const CVec& z) {
                return fiber_gram(AffineCoords{a.chart, z}, l)(r, c);
              };
              dg(r, c) = numdiff::d(entry, a.z, static_cast<std::size_t>(dir));
            }
          CHECK(max_abs(dg - gram * omega[static_cast<std::size_t>(dir)]) < 1e-7);
        }
      }
    }
}

namespace {

PhaseSpacePath sample_two_chart_path() {
  PathSegment s1;
  s1.chart = ChartId{1};
  s1.points = {{Complex(0.1, 0.05)}, {Complex(0.7, 0.4)}, {Complex(1.2, -0.1)}};
  PathSegment s2;
  s2.chart = ChartId{2};
  s2.points = {transition(AffineCoords{ChartId{1}, s1.points.back()}, ChartId{2}).z,
               {Complex(0.3, 0.2)}};
  PhaseSpacePath path;
  path.segments = {s1, s2};
  return path;
}

}  // namespace

TEST_CASE("parallel transport: identity on the empty path, invertible, isometric, linear") {
  QHFiberState s{ChartId{1}, 1, {Complex(0.3, 0.1), Complex(-0.4, 0.8)}};
  const QHFiberState same = parallel_transport(s, PhaseSpacePath{});
  CHECK(same.amplitudes == s.amplitudes);

  const PhaseSpacePath path = sample_two_chart_path();
  const AffineCoords start{ChartId{1}, path.segments.front().points.front()};
  const AffineCoords end{ChartId{2}, path.segments.back().points.back()};
  for (const int l : {-1, 1, 2}) {
    const std::size_t d = static_cast<std::size_t>(fiber_dimension(1, l));
    Rng rng(58 + static_cast<std::uint64_t>(l));
    QHFiberState v{ChartId{1}, l, CVec(d)};
    QHFiberState w{ChartId{1}, l, CVec(d)};
    for (std::size_t i = 0; i < d; ++i) {
      v.amplitudes[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      w.amplitudes[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    const QHFiberState tv = parallel_transport(v, path);
    CHECK(tv.chart == ChartId{2});
    // norm preserved
    CHECK(std::abs(fiber_norm(tv, end) - fiber_norm(v, start)) < 1e-8);
    // full inner products preserved
    const QHFiberState tw = parallel_transport(w, path);
    CHECK(std::abs(fiber_inner_product(tv, tw, end) - fiber_inner_product(v, w, start)) < 1e-8);
    // reverse transport undoes
    const QHFiberState back = parallel_transport(tv, reversed_path(path));
    for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(back.amplitudes[i] - v.amplitudes[i]) < 1e-8);
    // linearity
    const Complex alpha(0.7, -0.2), beta(-0.3, 0.9);
    QHFiberState combo{ChartId{1}, l, CVec(d)};
    for (std::size_t i = 0; i < d; ++i)
      combo.amplitudes[i] = alpha * v.amplitudes[i] + beta * w.amplitudes[i];
    const QHFiberState tcombo = parallel_transport(combo, path);
    for (std::size_t i = 0; i < d; ++i)
      CHECK(std::abs(tcombo.amplitudes[i] - alpha * tv.amplitudes[i] - beta * tw.amplitudes[i]) <
            1e-10);
  }
}

TEST_CASE("path validation catches broken junctions and bad states") {
  PhaseSpacePath broken = sample_two_chart_path();
  broken.segments[1].points.front()[0] += Complex(1e-6, 0.0);
  CHECK_THROWS_AS(validate_path(broken), PathDiscontinuous);

  QHFiberState s{ChartId{2}, 1, {Complex(1.0, 0.0), Complex(0.0, 0.0)}};
  CHECK_THROWS_AS(parallel_transport(s, sample_two_chart_path()), ChartMismatch);
}

TEST_CASE("degenerate loops have identity holonomy") {
  PhaseSpacePath still;
  PathSegment seg;
  seg.chart = ChartId{1};
  seg.points = {{Complex(0.2, 0.1)}, {Complex(0.2, 0.1)}};
  still.segments.push_back(seg);
  const HolonomyResult h = holonomy(still, 1);
  CHECK(max_abs(h.matrix - CMat::identity(2)) < 1e-12);
}

TEST_CASE("square-loop holonomy matches the curvature to fourth order") {
  // At the origin of CP^1 with l = 1 the counterclockwise square of side s
  // gives holonomy ~ diag(exp(2 i s^2), exp(4 i s^2)): the enclosed
  // symplectic area is 2 s^2 and the tangent curvature doubles the vacuum
  // one.
  for (const double side : {0.1, 0.05, 0.025}) {
    const HolonomyResult h = holonomy(square_loop(1, {Complex(0.0, 0.0)}, side), 1);
    const double s2 = side * side;
    CHECK(std::abs(h.matrix(0, 0) - Complex(1.0, 2.0 * s2)) < 10.0 * s2 * s2 + 1e-8);
    CHECK(std::abs(h.matrix(1, 1) - Complex(1.0, 4.0 * s2)) < 10.0 * s2 * s2 + 1e-8);
    CHECK(std::abs(h.matrix(0, 1)) < 1e-10);
    CHECK(std::abs(h.matrix(1, 0)) < 1e-10);
    // unitary with respect to the Gram at the base point
    const CMat gram = fiber_gram(AffineCoords{ChartId{1}, {Complex(0.0, 0.0)}}, 1);
    CHECK(unitarity_residual(h.matrix, gram) < 1e-8);
    // area estimate of the square is 2 s^2 to fourth order
    CHECK(std::abs(loop_area_estimate(h.loop) - 2.0 * s2) < 10.0 * s2 * s2);
  }
}

TEST_CASE("holonomy witnesses nonflatness at side 0.5") {
  const HolonomyResult h = holonomy(square_loop(1, {Complex(0.0, 0.0)}, 0.5), 1);
  CHECK(operator_norm(h.matrix - CMat::identity(2)) > 1e-2);
}

TEST_CASE("vacuum holonomy phase equals the oriented enclosed area") {
  // circle of radius 0.6 in chart 1, counterclockwise: the class-l phase is
  // exp(i l A) with A the oriented symplectic area of the enclosed disk
  PhaseSpacePath circle;
  PathSegment seg;
  seg.chart = ChartId{1};
  const int chords = 512;
  for (int m = 0; m <= chords; ++m) {
    const double th = 2.0 * M_PI * m / chords;
    seg.points.push_back({Complex(0.6 * std::cos(th), 0.6 * std::sin(th))});
  }
  seg.points.back() = seg.points.front();
  circle.segments.push_back(seg);
  const double area = loop_area_estimate(circle);
  CHECK(area > 0.0);  // counterclockwise
  {
    const HolonomyResult h = holonomy(circle, 1);
    const Complex expected = std::exp(Complex(0.0, area));
    CHECK(std::abs(h.matrix(0, 0) - expected) < 1e-6);
    // the tangent line of CP^1 carries twice the curvature
    const Complex tangent_expected = std::exp(Complex(0.0, 2.0 * area));
    CHECK(std::abs(h.matrix(1, 1) - tangent_expected) < 1e-6);
  }
  {
    // for l = 2 the pure-twist labels {2}, {3} carry the class-l phase; the
    // all-tangent label {1} picks up the tangent curvature on top
    const HolonomyResult h = holonomy(circle, 2);
    CHECK(std::abs(h.matrix(1, 1) - std::exp(Complex(0.0, 2.0 * area))) < 1e-6);
    CHECK(std::abs(h.matrix(2, 2) - std::exp(Complex(0.0, 2.0 * area))) < 1e-6);
    CHECK(std::abs(h.matrix(0, 0) - std::exp(Complex(0.0, 4.0 * area))) < 1e-6);
  }
}

TEST_CASE("equator holonomy: vacuum phase -1, tangent phase +1, spec phase law") {
  const PhaseSpacePath loop = equator_loop();
  const HolonomyResult h = holonomy(loop, 1);
  CHECK(std::abs(h.matrix(0, 0) - Complex(-1.0, 0.0)) < 1e-4);
  CHECK(std::abs(h.matrix(1, 1) - Complex(1.0, 0.0)) < 1e-4);
  // phase argument = -(enclosed area) compared mod 2 pi through unit phases
  const double area = cp1_total_area() / 2.0;
  const Complex expected = std::exp(Complex(0.0, -area));
  CHECK(std::abs(h.matrix(0, 0) - expected) < 1e-4);
  CHECK(unitarity_residual(h.matrix, fiber_gram(AffineCoords{ChartId{1}, {Complex(1.0, 0.0)}}, 1)) <
        1e-8);
}

TEST_CASE("holonomy conjugates covariantly under a base-point change") {
  // loop based at 0.3: square; connector from 0.0 to 0.3
  const PhaseSpacePath loop = square_loop(1, {Complex(0.3, 0.0)}, 0.4);
  PhaseSpacePath connector;
  PathSegment seg;
  seg.chart = ChartId{1};
  seg.points = {{Complex(0.0, 0.0)}, {Complex(0.3, 0.0)}};
  connector.segments.push_back(seg);

  PhaseSpacePath conjugated;
  conjugated.segments = connector.segments;
  for (const auto& s : loop.segments) conjugated.segments.push_back(s);
  for (const auto& s : reversed_path(connector).segments) conjugated.segments.push_back(s);

  const CMat t = transport_operator(connector, 1, 1);
  const CMat h_loop = holonomy(loop, 1).matrix;
  const CMat h_conj = holonomy(conjugated, 1).matrix;
  CHECK(max_abs(h_conj - inverse(t) * h_loop * t) < 1e-7);
}

TEST_CASE("holonomy rejects open or cross-chart loops") {
  PhaseSpacePath open_path;
  PathSegment seg;
  seg.chart = ChartId{1};
  seg.points = {{Complex(0.0, 0.0)}, {Complex(0.5, 0.0)}};
  open_path.segments.push_back(seg);
  CHECK_THROWS_AS(holonomy(open_path, 1), PathDiscontinuous);
  CHECK_THROWS_AS(holonomy(PhaseSpacePath{}, 1), PathDiscontinuous);
}

TEST_CASE("duality maps: trivial path, frozen two-path values, unitarity") {
  const ProjectivePoint p(CVec{Complex(1.0, 0.0), Complex(0.0, 0.0)});
  const ProjectivePoint q(CVec{Complex(0.0, 0.0), Complex(1.0, 0.0)});
  CHECK(max_abs(duality_map(p, p, PhaseSpacePath{}, 1) - CMat::identity(2)) == 0.0);

  const auto [path_a, path_b] = two_paths_demo();
  const CMat da = duality_map(p, q, path_a, 1);
  const CMat db = duality_map(p, q, path_b, 1);
  // transport through w = +1: diag(1, -1); through w = -1: diag(-1, -1)
  CHECK(std::abs(da(0, 0) - Complex(1.0, 0.0)) < 1e-8);
  CHECK(std::abs(da(1, 1) - Complex(-1.0, 0.0)) < 1e-8);
  CHECK(std::abs(db(0, 0) - Complex(-1.0, 0.0)) < 1e-8);
  CHECK(std::abs(db(1, 1) - Complex(-1.0, 0.0)) < 1e-8);
  CHECK(std::abs(da(0, 1)) < 1e-10);
  CHECK(std::abs(da(1, 0)) < 1e-10);
  CHECK(max_abs(da - db) > 1e-3);

  // unitary with respect to the endpoint inner products (both Grams are the
  // identity at the chart origins)
  CHECK(max_abs(adjoint(da) * da - CMat::identity(2)) < 1e-8);
  CHECK(max_abs(adjoint(db) * db - CMat::identity(2)) < 1e-8);

  // composing one path with the reverse of the other yields the meridian
  // holonomy, which the two-path mismatch reproduces
  PhaseSpacePath meridian = path_a;
  for (const auto& s : reversed_path(path_b).segments) meridian.segments.push_back(s);
  const CMat h = holonomy(meridian, 1).matrix;
  CHECK(max_abs(h - inverse(db) * da) < 1e-7);

  CHECK_THROWS_AS(duality_map(p, q, PhaseSpacePath{}, 1), PathDiscontinuous);
}

TEST_CASE("transport results are independent of evaluation threading") {
  const PhaseSpacePath loop = square_loop(1, {Complex(0.1, 0.1)}, 0.3);
  const CMat serial = holonomy(loop, 1).matrix;
  std::vector<CMat> parallel(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t]() { parallel[static_cast<std::size_t>(t)] = holonomy(loop, 1).matrix; });
  for (auto& w : workers) w.join();
  for (const auto& m : parallel) {
    REQUIRE(m.data.size() == serial.data.size());
    for (std::size_t i = 0; i < m.data.size(); ++i) CHECK(m.data[i] == serial.data[i]);
  }
}
