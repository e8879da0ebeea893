// Adem-relation normal form in A_p/(beta): an oracle for the Milnor-basis
// arithmetic that shares no code path with the Milnor product.
#pragma once

#include <cstddef>
#include <vector>

#include "steenrod/milnor.hpp"

namespace steenrod {

/// P^{a_1} P^{a_2} ... P^{a_n} with every letter >= 1.
class CompositionWord
{
public:
    CompositionWord(std::vector<Entry> letters, Prime p);

    const std::vector<Entry>& letters() const { return letters_; }
    Prime prime() const { return p_; }
    Entry degree() const;

private:
    std::vector<Entry> letters_;
    Prime p_;
};

/// Coefficient of P^{a+b-t} P^t in the Adem expansion of P^a P^b (a < p b):
/// (-1)^{a+t} binom((p-1)(b-t)-1, a-pt) mod p.
Coeff adem_coefficient(Entry a, Entry b, Entry t, Prime p);

/// Default cap on rewrite steps; exceeding it throws std::runtime_error.
inline constexpr std::size_t kAdemStepBudget = 1'000'000;

/// Rewrites the leftmost inadmissible pair until every word is admissible.
/// `steps`, when given, receives the number of rewrites performed.
AdmissibleExpansion adem_normalize(const CompositionWord& w, std::size_t* steps = nullptr,
                                   std::size_t budget = kAdemStepBudget);

/// True iff the Adem normal form and the iterated Milnor product agree once
/// both are written in the Milnor basis.
bool compare_with_milnor(const CompositionWord& w);

/// All compositions (ordered, positive parts) of every n in 1..max_sum.
std::vector<std::vector<Entry>> compositions_up_to(Entry max_sum);

}  // namespace steenrod
