#pragma once

#include "halfspin/tower.hpp"

#include <functional>
#include <optional>
#include <string>

namespace halfspin {

enum class NormStatus { Norm, NotNorm, Unknown };

// Answer to "is x a relative norm from E to E0?". Norm answers carry a
// verified witness c with norm_to_base(c) == x; NotNorm answers carry a
// certificate string (an embedding-sign or factorization obstruction).
struct NormVerdict {
  NormStatus status = NormStatus::Unknown;
  std::optional<FieldElement> witness;
  std::string certificate;

  static NormVerdict norm(FieldElement w, std::string cert = "");
  static NormVerdict not_norm(std::string cert);
  static NormVerdict unknown(std::string note);
};

struct NormSearchLimits {
  // Trial-division cutoff for the two-squares criterion over Q(i).
  unsigned long trial_division_bound = 1u << 20;
  // Height cap for the brute-force witness search over general towers.
  int witness_height = 4;
};

// Decides norm membership for a nonzero element of E0. The decision ladder:
// embedding signs (norms from an imaginary extension are totally positive),
// exact squares in E0 (c^2 = Nm(c)), the two-squares criterion when E = Q(i),
// then a bounded witness search. Anything undecided is reported Unknown.
NormVerdict is_norm(const FieldElement& x, const NormSearchLimits& limits = {});

using NormOracle = std::function<NormVerdict(const FieldElement&)>;

/// Oracle wrapping is_norm for the tower of its argument.
NormOracle exact_norm_oracle(const NormSearchLimits& limits = {});

// Oracle modeling the archimedean picture under one real embedding: every
// totally positive real is a norm from C. Witnesses are attached only when a
// square root exists in E0 itself.
NormOracle embedding_sign_oracle(int embedding);

}  // namespace halfspin
