#ifndef SYMCA_MULTIVALUED_DATA_HPP
#define SYMCA_MULTIVALUED_DATA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace symca {

/// 0/1 individuals-by-modalities matrix.
using BinaryMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::uint64_t kDefaultCompletionLimit = 1'000'000;

/// A qualitative variable whose value for each individual is a non-empty
/// set of modalities. Observation sets are stored as sorted, duplicate-free
/// index lists into `modalities()`.
class MultiValuedVariable {
 public:
  MultiValuedVariable(std::string name, std::vector<std::string> modalities,
                      std::vector<std::vector<int>> observations);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& modalities() const { return modalities_; }
  const std::vector<std::vector<int>>& observations() const { return observations_; }

  int num_individuals() const { return static_cast<int>(observations_.size()); }
  int num_modalities() const { return static_cast<int>(modalities_.size()); }

  /// Labels of observation `i`, in modality order.
  std::vector<std::string> labels_of(int i) const;

  /// Number of classical completions, saturated at UINT64_MAX.
  std::uint64_t completion_count() const;

  friend bool operator==(const MultiValuedVariable&, const MultiValuedVariable&) = default;

 private:
  std::string name_;
  std::vector<std::string> modalities_;
  std::vector<std::vector<int>> observations_;
};

/// Builds a variable from raw label sets. Without a vocabulary the
/// modalities are the distinct labels in lexicographic order.
MultiValuedVariable parse_observations(
    const std::vector<std::set<std::string>>& rows,
    const std::optional<std::vector<std::string>>& vocabulary = std::nullopt,
    std::string name = {});

/// Entry (i,j) is 1 iff observation i is exactly {j}.
BinaryMatrix meet_matrix(const MultiValuedVariable& v);

/// Entry (i,j) is 1 iff j belongs to observation i.
BinaryMatrix join_matrix(const MultiValuedVariable& v);

/// Calls `visit` with the choice vector of every disjunctive completion in
/// lexicographic order; choice[i] is the modality index picked for
/// individual i. Throws EnumerationTooLarge when the count exceeds `limit`.
void for_each_completion(const MultiValuedVariable& v, std::uint64_t limit,
                         const std::function<void(const std::vector<int>&)>& visit);

/// Disjunctive complete table for one choice vector.
BinaryMatrix completion_matrix(const MultiValuedVariable& v, const std::vector<int>& choice);

/// Every disjunctive complete table compatible with `v`.
std::vector<BinaryMatrix> enumerate_completions(const MultiValuedVariable& v,
                                                std::uint64_t limit = kDefaultCompletionLimit);

}  // namespace symca

#endif  // SYMCA_MULTIVALUED_DATA_HPP
