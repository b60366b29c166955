#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "hurwitz/constellation.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;

namespace {

BranchDatum datum(const std::string& text) { return parse_datum(text); }

Permutation random_permutation(int degree, std::mt19937& rng) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

}  // namespace

TEST_CASE("constellation pairs derive gamma so the product is the identity") {
  const Permutation alpha = parse_cycle_string("(1 2 3)(4 5)", 7);
  const Permutation beta = parse_cycle_string("(1 4)(2 6 7)", 7);
  const ConstellationPair pair(alpha, beta);
  CHECK(compose(pair.alpha(), compose(pair.beta(), pair.gamma())) == Permutation::identity(7));
  CHECK(pair.gamma() == inverse(compose(alpha, beta)));
}

TEST_CASE("transitivity detection") {
  CHECK(is_transitive(ConstellationPair(parse_cycle_string("(1 2 3 4 5 6 7)", 7),
                                        Permutation::identity(7))));
  CHECK_FALSE(is_transitive(ConstellationPair(parse_cycle_string("(1 2 3)", 7),
                                              parse_cycle_string("(5 6 7)", 7))));
}

TEST_CASE("rigid class counts of the worked data") {
  CHECK(enumerate_rigid_classes(datum("7; 3,2,1,1; 3,2,1,1; 7")).size() == 9);
  CHECK(enumerate_rigid_classes(datum("7; 7; 4,1,1,1; 3,2,1,1")).size() == 3);
  CHECK(enumerate_rigid_classes(datum("7; 3,3,1; 3,3,1; 4,2,1")).size() == 4);
  CHECK(enumerate_rigid_classes(datum("8; 4,2,2; 2,2,1,1,1,1; 8")).size() == 3);
}

TEST_CASE("the degree-4 exceptional datum admits no realization") {
  CHECK(enumerate_rigid_classes(datum("4; 3,1; 2,2; 2,2")).empty());
}

TEST_CASE("small data with a single class") {
  CHECK(enumerate_rigid_classes(datum("2; 2; 2; 1,1")).size() == 1);
  CHECK(enumerate_rigid_classes(datum("3; 3; 3; 3")).size() == 1);
}

TEST_CASE("counting is invariant under reordering the partition triple") {
  CHECK(enumerate_rigid_classes(datum("7; 7; 3,2,1,1; 3,2,1,1")).size() == 9);
  CHECK(enumerate_rigid_classes(datum("7; 4,2,1; 3,3,1; 3,3,1")).size() == 4);
}

TEST_CASE("representatives realize the datum exactly") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const std::vector<ConstellationPair> classes = enumerate_rigid_classes(d);
  const Permutation pinned = canonical_class_rep(d.partitions()[0]);
  for (const ConstellationPair& pair : classes) {
    CHECK(pair.alpha() == pinned);
    CHECK(cycle_type(pair.alpha()) == d.partitions()[0]);
    CHECK(cycle_type(pair.beta()) == d.partitions()[1]);
    CHECK(cycle_type(pair.gamma()) == d.partitions()[2]);
    CHECK(is_transitive(pair));
  }
}

TEST_CASE("class keys separate the classes and sort the output") {
  const std::vector<ConstellationPair> classes =
      enumerate_rigid_classes(datum("7; 3,2,1,1; 3,2,1,1; 7"));
  std::set<RigidClassKey> keys;
  for (const ConstellationPair& pair : classes) keys.insert(class_key(pair));
  CHECK(keys.size() == classes.size());
  for (std::size_t i = 1; i < classes.size(); ++i)
    CHECK(class_key(classes[i - 1]) < class_key(classes[i]));
}

TEST_CASE("class keys are invariant under simultaneous conjugation") {
  std::mt19937 rng(20260816);
  const std::vector<ConstellationPair> classes =
      enumerate_rigid_classes(datum("7; 3,3,1; 3,3,1; 4,2,1"));
  for (const ConstellationPair& pair : classes) {
    const RigidClassKey key = class_key(pair);
    for (int trial = 0; trial < 25; ++trial) {
      const Permutation g = random_permutation(pair.degree(), rng);
      const ConstellationPair moved(conjugate(pair.alpha(), g), conjugate(pair.beta(), g));
      CHECK(class_key(moved) == key);
      CHECK(moved.gamma() == conjugate(pair.gamma(), g));
    }
  }
}

TEST_CASE("distinct classes get distinct keys even after conjugation") {
  std::mt19937 rng(7);
  const std::vector<ConstellationPair> classes =
      enumerate_rigid_classes(datum("7; 3,2,1,1; 3,2,1,1; 7"));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const Permutation g = random_permutation(7, rng);
      const ConstellationPair moved(conjugate(classes[i].alpha(), g),
                                    conjugate(classes[i].beta(), g));
      CHECK(class_key(moved) != class_key(classes[j]));
    }
}

TEST_CASE("enumeration is identical across worker counts") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const std::vector<ConstellationPair> one = enumerate_rigid_classes(d, 1);
  const std::vector<ConstellationPair> two = enumerate_rigid_classes(d, 2);
  const std::vector<ConstellationPair> eight = enumerate_rigid_classes(d, 8);
  CHECK(one == two);
  CHECK(one == eight);

  const BranchDatum e = datum("8; 4,2,2; 2,2,1,1,1,1; 8");
  CHECK(enumerate_rigid_classes(e, 1) == enumerate_rigid_classes(e, 8));
}

TEST_CASE("class enumeration requires exactly three partitions") {
  const BranchDatum two_points = check_compatibility(2, {Partition({2}), Partition({2})});
  CHECK_THROWS_AS(enumerate_rigid_classes(two_points), IncompatibleDatum);
}
