#ifndef APOLLONET_HISTOGRAM_HPP
#define APOLLONET_HISTOGRAM_HPP

#include <cstdint>
#include <map>
#include <stdexcept>

namespace apollonet {

/// Sparse value -> count map with normalization to an empirical pmf.
class Histogram {
public:
    void add(std::uint64_t value, std::uint64_t count = 1) {
        counts_[value] += count;
        total_ += count;
    }

    std::uint64_t total() const { return total_; }

    std::uint64_t count(std::uint64_t value) const {
        const auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    double pmf(std::uint64_t value) const {
        if (total_ == 0) throw std::logic_error("empty histogram has no pmf");
        return static_cast<double>(count(value)) / static_cast<double>(total_);
    }

    double mean() const {
        if (total_ == 0) throw std::logic_error("empty histogram has no mean");
        double s = 0.0;
        for (const auto& [value, count] : counts_)
            s += static_cast<double>(value) * static_cast<double>(count);
        return s / static_cast<double>(total_);
    }

    const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }

private:
    std::map<std::uint64_t, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

}  // namespace apollonet

#endif
