#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pamono/generators.hpp"
#include "pamono/nfold.hpp"

using namespace pamono;

namespace {

std::vector<size_t> cell_sizes(const CellLattice& lat) {
  std::vector<size_t> out;
  for (const auto& c : lat.cells) out.push_back(c.size());
  return out;
}

}  // namespace

TEST_CASE("k = 1 reduces to the single-structure validator") {
  MultiStructure m{3, {fixtures::interval()}, {"a0"}};
  REQUIRE(validate_nfold(m).valid());

  MultiStructure bad{2, {fixtures::broken_off_support()}, {"a0"}};
  const auto r = validate_nfold(bad);
  const auto r_single = validate_structure(fixtures::broken_off_support());
  REQUIRE(r.violations.size() == r_single.violations.size());
  for (size_t i = 0; i < r.violations.size(); ++i) {
    REQUIRE(r.violations[i].kind == r_single.violations[i].kind);
    REQUIRE(r.violations[i].witnesses == r_single.violations[i].witnesses);
  }
}

TEST_CASE("k = 2 report is identical to validate_double") {
  for (const auto& d :
       {pair_double_groupoid(2), commutative_monoid_double(fixtures::s3_table(), 6),
        commutative_monoid_double(fixtures::z2_table(), 2)}) {
    REQUIRE(validate_nfold(MultiStructure::from_double(d)) == validate_double(d));
  }
}

TEST_CASE("ncube pair groupoid is a valid n-fold structure") {
  const auto m = ncube_pair_groupoid(2, 3);
  REQUIRE(m.n == 256);
  REQUIRE(validate_nfold(m).valid());
}

TEST_CASE("cell lattice of the pair double groupoid") {
  const auto m = MultiStructure::from_double(pair_double_groupoid(3));
  const auto lat = cell_lattice(m);
  REQUIRE(cell_sizes(lat) == std::vector<size_t>({81, 9, 9, 3}));
}

TEST_CASE("cell lattice of the interval category, k = 1") {
  MultiStructure m{3, {fixtures::interval()}, {"a0"}};
  const auto lat = cell_lattice(m);
  REQUIRE(cell_sizes(lat) == std::vector<size_t>({3, 2}));
}

TEST_CASE("cell lattice of the 3-cube groupoid") {
  const auto lat = cell_lattice(ncube_pair_groupoid(2, 3));
  // |cell(S)| = m^(2^(k-|S|))
  const std::vector<size_t> want{256, 16, 16, 4, 16, 4, 4, 2};
  REQUIRE(cell_sizes(lat) == want);
}

TEST_CASE("permuting the axes keeps validity and cell sizes") {
  auto m = ncube_pair_groupoid(2, 2);
  std::swap(m.structures[0], m.structures[1]);
  std::swap(m.axis_names[0], m.axis_names[1]);
  REQUIRE(validate_nfold(m).valid());
  const auto lat = cell_lattice(m);
  auto sizes = cell_sizes(lat);
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<size_t>({2, 4, 4, 16}));
}

TEST_CASE("axis cap is enforced") {
  MultiStructure m{1, {}, {}};
  for (int i = 0; i < 7; ++i) {
    m.structures.push_back(fixtures::trivial());
    m.axis_names.push_back("a" + std::to_string(i));
  }
  REQUIRE_THROWS_AS(cell_lattice(m), std::invalid_argument);
  REQUIRE_NOTHROW(cell_lattice(m, 7));
}
