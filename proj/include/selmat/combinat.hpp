#pragma once

#include "selmat/exact.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace selmat {

struct UnequalWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive parts; the empty partition has weight 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);  // sorts, drops zeros, rejects negatives

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    // multiplicity of the part value v
    int multiplicity(int v) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);  // "2,1,1"; empty as "0"
Partition parse_partition(const std::string& text);

// reverse-lexicographic: (4),(3,1),(2,2),(2,1,1),(1,1,1,1)
bool revlex_before(const Partition& a, const Partition& b);
std::vector<Partition> partitions_of(int k);
bool dominance_leq(const Partition& mu, const Partition& lambda);

Rational z_lambda(const Partition& mu);

// Bijection of {1..k}; images[i-1] = pi(i). Composition (a*b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);
    static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Permutation operator*(const Permutation& a, const Permutation& b);
std::string to_string(const Permutation& p);  // cycle notation, "e" for identity
std::vector<Permutation> all_permutations(int k);

Partition cycle_type(const Permutation& pi);
Partition coset_type(const Permutation& sigma);

// pairs listed with sigma(1)=1 < sigma(3) < ... and sigma(2i-1) < sigma(2i)
struct PairPartition {
    std::vector<std::pair<int, int>> pairs;
    Permutation as_permutation() const;
};

std::vector<PairPartition> pair_partitions(int k);
std::vector<Permutation> hyperoctahedral(int k);

int character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
    int k = 0;
    std::vector<Partition> partitions;  // rows (irreps) and columns (cycle types), same order
    std::map<std::pair<Partition, Partition>, int> values;
    int operator()(const Partition& lambda, const Partition& mu) const { return values.at({lambda, mu}); }
};

CharacterTable character_table(int k);

// m_lambda(1^n)
Rational monomial_principal(const Partition& lambda, long n);

}  // namespace selmat
