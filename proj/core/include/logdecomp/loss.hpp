#pragma once

#include <cstddef>
#include <span>

#include "logdecomp/log_base.hpp"

namespace logdecomp {

/// Longest argument list accepted by the list-based loss functions; their
/// cost is 2^n.
inline constexpr std::size_t kMaxLossArguments = 24;

/// Total loss L(p1..pn): entropy lost when the given cells are merged into
/// one. Arguments may exceed 1; zero terms contribute nothing. Throws
/// DomainError on negative or non-finite input.
double total_loss(std::span<const double> probabilities, LogBase base = LogBase::two);

/// Interior loss L°(p1..pn), the Möbius inversion of the total loss over the
/// subset lattice:
///
///   L°(S) = sum over T ⊆ S of (-1)^(|S|-|T|) L(T)
///
/// Subsets are paired across the largest argument x, so each term is the
/// non-negative merge gain L(T ∪ {x}) - L(T), evaluated without
/// cancellation. This keeps the result accurate when x dwarfs the rest.
/// Returns 0 for n = 1. Throws DomainError on bad input or n = 0.
double interior_loss(std::span<const double> probabilities, LogBase base = LogBase::two);

/// Interior loss through the alternating product of sigma terms,
///
///   L°(p1..pn) = sum_k (-1)^(n-k) log A_k,   A_k = prod_{|T|=k} σ(T),
///   σ(T) = (sum T)^(sum T),
///
/// evaluated literally (log A_k accumulated as sums of x log x). Used as an
/// independent route to cross-check interior_loss.
double interior_loss_identity(std::span<const double> probabilities,
                              LogBase base = LogBase::two);

}  // namespace logdecomp
