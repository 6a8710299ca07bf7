#include "nested/impose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nested {

Address impose_member(const Address& A, const Address& B) {
    const auto fill = [&](long i) {
        const Digit da = A.digit_at(i);
        return da != 0 ? da : B.digit_at(i);
    };
    const long int_len =
        static_cast<long>(std::max(A.int_digits().size(), B.int_digits().size()));
    std::vector<Digit> int_digits;
    for (long i = int_len - 1; i >= 0; --i) int_digits.push_back(fill(i));

    const std::size_t pre_len = std::max(A.tail().pre.size(), B.tail().pre.size());
    std::vector<Digit> pre;
    for (std::size_t d = 1; d <= pre_len; ++d) pre.push_back(fill(-static_cast<long>(d)));
    // Below both preperiods the fill repeats with the lcm of the periods.
    const std::size_t per_len = std::lcm(A.tail().per.size(), B.tail().per.size());
    std::vector<Digit> per;
    for (std::size_t d = pre_len + 1; d <= pre_len + per_len; ++d)
        per.push_back(fill(-static_cast<long>(d)));
    return Address(std::move(int_digits), Tail::make(std::move(pre), std::move(per)));
}

ImposedSet impose(const Address& a, const Address& b, const SpaceSpec& spec,
                  std::size_t depth, std::size_t cap) {
    const EquivalenceClass ca = class_members(a, spec, depth, cap);
    const EquivalenceClass cb = class_members(b, spec, depth, cap);

    std::set<Address> raw;
    for (const Address& A : ca.members)
        for (const Address& B : cb.members) raw.insert(impose_member(A, B));

    ImposedSet result;
    result.raw.assign(raw.begin(), raw.end());
    std::map<Address, EquivalenceClass> by_representative;
    for (const Address& r : result.raw) {
        EquivalenceClass cls = class_members(r, spec, depth, cap);
        by_representative.emplace(cls.representative, std::move(cls));
    }
    for (auto& [rep, cls] : by_representative) result.classes.push_back(std::move(cls));
    return result;
}

} // namespace nested
