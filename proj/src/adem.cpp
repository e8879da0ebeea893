#include "steenrod/adem.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace steenrod {

CompositionWord::CompositionWord(std::vector<Entry> letters, Prime p) : letters_(std::move(letters)), p_(p)
{
    for (Entry a : letters_)
        if (a == 0)
            throw std::invalid_argument("composition letters must be positive");
}

Entry CompositionWord::degree() const
{
    Entry s = 0;
    for (Entry a : letters_)
        s += a;
    return 2 * (p_ - 1) * s;
}

Coeff adem_coefficient(Entry a, Entry b, Entry t, Prime p)
{
    const auto top = static_cast<std::int64_t>((p - 1) * (b - t)) - 1;
    const auto bottom = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p * t);
    return mul_mod(sign_mod(a + t, p), binomial_mod(top, bottom, p), p);
}

AdmissibleExpansion adem_normalize(const CompositionWord& w, std::size_t* steps, std::size_t budget)
{
    const Prime p = w.prime();
    AdmissibleExpansion result(p);
    std::map<std::vector<Entry>, Coeff> pending;
    pending.emplace(w.letters(), 1);
    std::size_t count = 0;

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<Entry>& word = node.key();
        const Coeff c = node.mapped();

        std::size_t k = 0;
        while (k + 1 < word.size() && word[k] >= p * word[k + 1])
            ++k;
        if (k + 1 >= word.size()) {
            result.add_term(ExponentSeq(word), c);
            continue;
        }
        if (++count > budget)
            throw std::runtime_error("Adem rewriting exceeded its step budget");

        const Entry a = word[k], b = word[k + 1];
        for (Entry t = 0; p * t <= a; ++t) {
            const Coeff ct = adem_coefficient(a, b, t, p);
            if (ct == 0)
                continue;
            std::vector<Entry> next(word.begin(), word.begin() + k);
            next.push_back(a + b - t);
            if (t)
                next.push_back(t);
            next.insert(next.end(), word.begin() + k + 2, word.end());
            Coeff& slot = pending[std::move(next)];
            slot = add_mod(slot, mul_mod(c, ct, p), p);
        }
        std::erase_if(pending, [](const auto& kv) { return kv.second == 0; });
    }
    if (steps)
        *steps = count;
    return result;
}

bool compare_with_milnor(const CompositionWord& w)
{
    return to_milnor(adem_normalize(w)) == composite_to_milnor(w.letters(), w.prime());
}

std::vector<std::vector<Entry>> compositions_up_to(Entry max_sum)
{
    std::vector<std::vector<Entry>> out;
    std::vector<Entry> cur;
    std::function<void(Entry)> rec = [&](Entry rest) {
        if (!cur.empty())
            out.push_back(cur);
        for (Entry a = 1; a <= rest; ++a) {
            cur.push_back(a);
            rec(rest - a);
            cur.pop_back();
        }
    };
    rec(max_sum);
    return out;
}

}  // namespace steenrod
