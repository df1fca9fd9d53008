#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackfock {

// Integer partition: weakly decreasing positive parts. The empty partition
// is valid.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    // Zero past the last part.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    // Number of parts equal to n.
    int multiplicity(int n) const;

    Partition transpose() const;
    // Diagonal length d = #{i : lambda_i >= i}.
    int diagonal_length() const;

    // Lexicographic on the part sequence.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Sort arbitrary positive parts into a partition.
Partition partition_from_parts(std::vector<int> parts);

// All partitions of k in descending lexicographic order.
std::vector<Partition> enumerate_level(int k);

struct FrobeniusCoords {
    std::vector<int> arms;  // alpha_i = lambda_i - i
    std::vector<int> legs;  // beta_i = lambda^t_i - i
    int d() const { return static_cast<int>(arms.size()); }
    bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& lambda);
Partition from_frobenius(const FrobeniusCoords& f);

enum class Dominance { less, equal, greater, incomparable };

class WeightMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Compares mu against lambda by partial sums.
Dominance dominance_compare(const Partition& mu, const Partition& lambda);
const char* dominance_name(Dominance d);

struct PartitionStats {
    std::int64_t n_lambda = 0;     // sum (i-1) lambda_i
    std::int64_t n_transpose = 0;  // same for the transpose
    int d = 0;
    int weight = 0;
};

PartitionStats partition_stats(const Partition& lambda);

enum class IdentityKind { kappa, hook, column_square, theorem4 };
const char* identity_name(IdentityKind k);
IdentityKind identity_from_name(const std::string& name);

struct IdentityCheck {
    bool holds = false;
    mpq_class lhs;
    mpq_class rhs;
};

IdentityCheck verify_identity(IdentityKind kind, const Partition& lambda);

// Sum over the diagonal of n_i^2 - m_i^2 with n_i = alpha_i + 1/2, m_i = beta_i + 1/2.
mpq_class free_fermion_energy(const Partition& lambda);
// Sum of squared column lengths.
std::int64_t hd_energy(const Partition& lambda);
// Sum of squared row lengths.
std::int64_t row_square_sum(const Partition& lambda);

// Number of elements in a longest chain of the dominance order on partitions of k.
int longest_dominance_chain(int k);

}  // namespace jackfock
