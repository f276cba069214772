#include "symca/multivalued_data.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

#include "symca/errors.hpp"

namespace symca {

MultiValuedVariable::MultiValuedVariable(std::string name, std::vector<std::string> modalities,
                                         std::vector<std::vector<int>> observations)
    : name_(std::move(name)), modalities_(std::move(modalities)), observations_(std::move(observations)) {
  if (modalities_.empty()) throw ValidationError("variable has no modalities");
  if (observations_.empty()) throw ValidationError("variable has no individuals");
  std::unordered_set<std::string> seen;
  for (const auto& label : modalities_)
    if (!seen.insert(label).second) throw ValidationError("duplicate modality label '" + label + "'");

  const int q = num_modalities();
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    auto& obs = observations_[i];
    if (obs.empty())
      throw ValidationError("empty observation set at individual " + std::to_string(i));
    for (int j : obs)
      if (j < 0 || j >= q)
        throw ValidationError("modality index " + std::to_string(j) + " out of range at individual " +
                              std::to_string(i));
    std::sort(obs.begin(), obs.end());
    obs.erase(std::unique(obs.begin(), obs.end()), obs.end());
  }
}

std::vector<std::string> MultiValuedVariable::labels_of(int i) const {
  std::vector<std::string> out;
  for (int j : observations_.at(static_cast<std::size_t>(i))) out.push_back(modalities_[j]);
  return out;
}

std::uint64_t MultiValuedVariable::completion_count() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (const auto& obs : observations_) {
    const auto size = static_cast<std::uint64_t>(obs.size());
    if (count > kMax / size) return kMax;
    count *= size;
  }
  return count;
}

MultiValuedVariable parse_observations(const std::vector<std::set<std::string>>& rows,
                                       const std::optional<std::vector<std::string>>& vocabulary,
                                       std::string name) {
  if (rows.empty()) throw ValidationError("no observations");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].empty()) throw ValidationError("empty observation set at individual " + std::to_string(i));

  std::vector<std::string> modalities;
  if (vocabulary) {
    modalities = *vocabulary;
  } else {
    std::set<std::string> distinct;
    for (const auto& row : rows) distinct.insert(row.begin(), row.end());
    modalities.assign(distinct.begin(), distinct.end());
  }

  std::map<std::string, int> index;
  for (std::size_t j = 0; j < modalities.size(); ++j) index.emplace(modalities[j], static_cast<int>(j));

  std::vector<std::vector<int>> observations;
  observations.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> obs;
    for (const auto& label : rows[i]) {
      auto it = index.find(label);
      if (it == index.end())
        throw ValidationError("unknown label '" + label + "' at individual " + std::to_string(i));
      obs.push_back(it->second);
    }
    observations.push_back(std::move(obs));
  }
  return MultiValuedVariable(std::move(name), std::move(modalities), std::move(observations));
}

BinaryMatrix meet_matrix(const MultiValuedVariable& v) {
  BinaryMatrix out = BinaryMatrix::Zero(v.num_individuals(), v.num_modalities());
  for (int i = 0; i < v.num_individuals(); ++i) {
    const auto& obs = v.observations()[static_cast<std::size_t>(i)];
    if (obs.size() == 1) out(i, obs.front()) = 1;
  }
  return out;
}

BinaryMatrix join_matrix(const MultiValuedVariable& v) {
  BinaryMatrix out = BinaryMatrix::Zero(v.num_individuals(), v.num_modalities());
  for (int i = 0; i < v.num_individuals(); ++i)
    for (int j : v.observations()[static_cast<std::size_t>(i)]) out(i, j) = 1;
  return out;
}

void for_each_completion(const MultiValuedVariable& v, std::uint64_t limit,
                         const std::function<void(const std::vector<int>&)>& visit) {
  const std::uint64_t count = v.completion_count();
  if (count > limit) throw EnumerationTooLarge(count, limit);

  const auto& obs = v.observations();
  const std::size_t m = obs.size();
  // Odometer over positions into each observation set; the last individual
  // varies fastest, which yields lexicographic order of the choice tuples.
  std::vector<std::size_t> pos(m, 0);
  std::vector<int> choice(m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) choice[i] = obs[i][pos[i]];
    visit(choice);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++pos[i] < obs[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

BinaryMatrix completion_matrix(const MultiValuedVariable& v, const std::vector<int>& choice) {
  BinaryMatrix out = BinaryMatrix::Zero(v.num_individuals(), v.num_modalities());
  for (std::size_t i = 0; i < choice.size(); ++i) out(static_cast<Eigen::Index>(i), choice[i]) = 1;
  return out;
}

std::vector<BinaryMatrix> enumerate_completions(const MultiValuedVariable& v, std::uint64_t limit) {
  std::vector<BinaryMatrix> out;
  for_each_completion(v, limit, [&](const std::vector<int>& choice) {
    out.push_back(completion_matrix(v, choice));
  });
  return out;
}

}  // namespace symca
