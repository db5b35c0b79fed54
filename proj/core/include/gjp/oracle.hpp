#pragma once

#include <cstddef>
#include <functional>

#include "gjp/formula.hpp"
#include "gjp/observation.hpp"
#include "gjp/state.hpp"

namespace gjp {

/// Every global state sequence of a fixed length over a signature.
class CompletionSpace {
 public:
  static constexpr std::size_t kDefaultCeiling = 1'000'000;

  /// Throws InstanceTooLarge when (prod |D_v|)^length exceeds `ceiling`.
  CompletionSpace(const Signature& signature, std::size_t length,
                  std::size_t ceiling = kDefaultCeiling);

  std::size_t size() const { return size_; }
  std::size_t length() const { return length_; }

  /// Visits completions in odometer order; stops early when `visit` returns false.
  /// Returns false iff stopped early.
  bool for_each(const std::function<bool(const StateSequence&)>& visit) const;

 private:
  const Signature* signature_;
  std::size_t length_;
  std::size_t size_;
};

/// Brute-force Boolean semantics quantifying over all completions of partial
/// perspectives. Exponential; meant as a test oracle on tiny instances.
class CompleteSemantics {
 public:
  CompleteSemantics(const Signature& signature, const ObservationModel& model,
                    std::size_t ceiling = CompletionSpace::kDefaultCeiling);

  bool holds(const StateSequence& seq, const Formula& formula) const;

 private:
  bool all_completions(const StateSequence& partial, const Formula& formula) const;
  bool decided(const StateSequence& partial, const Formula& formula) const;

  const Signature* signature_;
  const ObservationModel* model_;
  std::size_t ceiling_;
};

bool complete_eval(const Signature& signature, const ObservationModel& model, const StateSequence& seq,
                   const Formula& formula, std::size_t ceiling = CompletionSpace::kDefaultCeiling);

}  // namespace gjp
