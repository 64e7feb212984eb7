#include <charsub/index_set.hpp>

#include <algorithm>
#include <stdexcept>

namespace charsub {

IndexSet IndexSet::explicit_set(std::vector<std::int64_t> elements, std::string label) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1) {
            throw std::invalid_argument("index set members must be >= 1");
        }
        if (i > 0 && elements[i] <= elements[i - 1]) {
            throw std::invalid_argument("explicit index set must be strictly increasing");
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->explicit_kind = true;
    impl->horizon = elements.empty() ? 0 : elements.back();
    impl->elements = std::move(elements);
    impl->label = std::move(label);
    return IndexSet(std::move(impl));
}

IndexSet IndexSet::predicate_set(std::string label,
                                 std::function<bool(std::int64_t)> pred,
                                 std::int64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("predicate set horizon must be >= 1");
    if (!pred) throw std::invalid_argument("predicate set needs a predicate");
    auto impl = std::make_shared<Impl>();
    impl->explicit_kind = false;
    impl->predicate = std::move(pred);
    impl->horizon = horizon;
    impl->label = std::move(label);
    return IndexSet(std::move(impl));
}

IndexSet IndexSet::shifted(int delta) const {
    if (delta != 1 && delta != -1) {
        throw std::invalid_argument("index set shift must be +1 or -1");
    }
    const std::string label = impl_->label + (delta == 1 ? "+1" : "-1");
    if (impl_->explicit_kind) {
        std::vector<std::int64_t> out;
        out.reserve(impl_->elements.size());
        for (std::int64_t n : impl_->elements) {
            if (n + delta >= 1) out.push_back(n + delta);
        }
        return explicit_set(std::move(out), label);
    }
    auto inner = impl_;
    const std::int64_t horizon = std::max<std::int64_t>(1, impl_->horizon + delta);
    return predicate_set(
        label,
        [inner, delta](std::int64_t n) {
            const std::int64_t src = n - delta;
            if (src < 1) return false;
            if (src > inner->horizon) {
                throw std::out_of_range("index set query beyond horizon");
            }
            return inner->predicate(src);
        },
        horizon);
}

bool IndexSet::contains(std::int64_t n) const {
    if (n < 1) return false;
    if (impl_->explicit_kind) {
        return std::binary_search(impl_->elements.begin(), impl_->elements.end(), n);
    }
    if (n > impl_->horizon) {
        throw std::out_of_range("index set '" + impl_->label + "' queried at " +
                                std::to_string(n) + " beyond horizon " +
                                std::to_string(impl_->horizon));
    }
    return impl_->predicate(n);
}

std::vector<std::int64_t> IndexSet::elements_in(std::int64_t lo, std::int64_t hi) const {
    lo = std::max<std::int64_t>(lo, 1);
    std::vector<std::int64_t> out;
    if (impl_->explicit_kind) {
        for (std::int64_t n : impl_->elements) {
            if (n >= lo && n <= hi) out.push_back(n);
        }
        return out;
    }
    if (hi > impl_->horizon) {
        throw std::out_of_range("index set '" + impl_->label + "' enumerated to " +
                                std::to_string(hi) + " beyond horizon " +
                                std::to_string(impl_->horizon));
    }
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (impl_->predicate(n)) out.push_back(n);
    }
    return out;
}

}  // namespace charsub
