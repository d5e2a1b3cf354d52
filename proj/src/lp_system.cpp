#include "parith/lp_system.hpp"

#include <algorithm>

namespace parith {

void UnknownTable::freeze() {
    std::sort(reqs_.begin(), reqs_.end());
    reqs_.erase(std::unique(reqs_.begin(), reqs_.end()), reqs_.end());
    frozen_ = true;
}

std::optional<UnknownId> UnknownTable::find(const Requirement& r) const {
    auto it = std::lower_bound(reqs_.begin(), reqs_.end(), r);
    if (it == reqs_.end() || !(*it == r)) return std::nullopt;
    return static_cast<UnknownId>(it - reqs_.begin());
}

UnknownId UnknownTable::id_of(const Requirement& r) const {
    auto id = find(r);
    if (!id) throw RangeError("unregistered requirement " + r.str());
    return *id;
}

}  // namespace parith
