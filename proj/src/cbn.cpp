#include "cbnobs/cbn.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cbnobs {

namespace {

bool sorted_unique(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

void check_index_list(const std::vector<int>& v, int limit, const char* what) {
    if (!sorted_unique(v))
        throw std::invalid_argument(std::string(what) + " list not sorted/duplicate-free");
    if (!v.empty() && (v.front() < 0 || v.back() >= limit))
        throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace

bool Cbn::is_observed(int v) const {
    return std::binary_search(observed.begin(), observed.end(), v);
}

std::vector<int> Cbn::unobserved() const {
    std::vector<int> result;
    result.reserve(n - observed.size());
    for (int v = 0; v < n; ++v)
        if (!is_observed(v)) result.push_back(v);
    return result;
}

void Cbn::validate() const {
    if (n < 1) throw std::invalid_argument("network needs at least one variable");
    if (static_cast<int>(updates.size()) != n)
        throw std::invalid_argument("updates size != n");
    for (const auto& args : updates) check_index_list(args, n, "argument");
    check_index_list(observed, n, "observed");
}

void Cbcn::validate() const {
    net.validate();
    if (input_count < 0) throw std::invalid_argument("negative input count");
    if (static_cast<int>(input_args.size()) != net.n)
        throw std::invalid_argument("input_args size != n");
    for (const auto& args : input_args) check_index_list(args, input_count, "input");
}

void GeneralOutputCbn::validate() const {
    net.validate();
    if (!net.observed.empty())
        throw std::invalid_argument("general-output network must not carry an observed set");
    for (const auto& args : outputs) {
        if (args.empty()) throw std::invalid_argument("empty output argument set");
        check_index_list(args, net.n, "output");
    }
}

Cbn with_observed(const Cbn& base, const std::vector<int>& extra) {
    Cbn result = base;
    result.observed.insert(result.observed.end(), extra.begin(), extra.end());
    std::sort(result.observed.begin(), result.observed.end());
    result.observed.erase(std::unique(result.observed.begin(), result.observed.end()),
                          result.observed.end());
    result.validate();
    return result;
}

}  // namespace cbnobs
