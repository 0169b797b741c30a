#include "covercount/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace covercount {

namespace {

// Shared by Partition::parse and ValueMultiset::parse: a comma-separated
// list of integers, empty string meaning the empty list.  Surrounding
// whitespace around each item is tolerated.
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    bool any = false;
    while (std::getline(in, item, ',')) {
        any = true;
        size_t first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw NonPositivePart("empty item in list: '" + text + "'");
        size_t last = item.find_last_not_of(" \t");
        std::string token = item.substr(first, last - first + 1);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw NonPositivePart("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw NonPositivePart("not an integer: '" + token + "'");
        out.push_back(value);
    }
    // "1,2," ends with an empty field that getline swallows; catch it.
    if (any && !text.empty() && text.back() == ',')
        throw NonPositivePart("trailing comma in list: '" + text + "'");
    return out;
}

std::string join_desc(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

Partition Partition::make(std::vector<int> raw) {
    for (int part : raw)
        if (part < 1)
            throw NonPositivePart("partition part must be >= 1, got " +
                                  std::to_string(part));
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    Partition p;
    p.parts_ = std::move(raw);
    p.sum_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
    return p;
}

int Partition::count_of(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const { return join_desc(parts_); }

Partition Partition::parse(const std::string& text) {
    return make(parse_int_list(text));
}

ValueMultiset ValueMultiset::make(const std::vector<int>& values) {
    for (int v : values)
        if (v < 1)
            throw NonPositivePart("multiset value must be >= 1, got " +
                                  std::to_string(v));
    ValueMultiset m;
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (!m.entries_.empty() && m.entries_.back().first == v)
            ++m.entries_.back().second;
        else
            m.entries_.emplace_back(v, 1);
        ++m.size_;
        m.sum_ += v;
    }
    return m;
}

int ValueMultiset::count_of(int value) const {
    for (const auto& [v, c] : entries_)
        if (v == value) return c;
    return 0;
}

int ValueMultiset::max_value() const {
    if (entries_.empty())
        throw BadArguments("max_value of an empty multiset");
    return entries_.back().first;
}

ValueMultiset ValueMultiset::with(int value) const {
    if (value < 1)
        throw NonPositivePart("multiset value must be >= 1, got " +
                              std::to_string(value));
    ValueMultiset m = *this;
    auto it = std::lower_bound(
        m.entries_.begin(), m.entries_.end(), value,
        [](const auto& e, int v) { return e.first < v; });
    if (it != m.entries_.end() && it->first == value)
        ++it->second;
    else
        m.entries_.insert(it, {value, 1});
    ++m.size_;
    m.sum_ += value;
    return m;
}

ValueMultiset ValueMultiset::without(int value) const {
    ValueMultiset m = *this;
    auto it = std::lower_bound(
        m.entries_.begin(), m.entries_.end(), value,
        [](const auto& e, int v) { return e.first < v; });
    if (it == m.entries_.end() || it->first != value)
        throw BadArguments("value " + std::to_string(value) +
                           " not present in multiset");
    if (--it->second == 0) m.entries_.erase(it);
    --m.size_;
    m.sum_ -= value;
    return m;
}

std::vector<int> ValueMultiset::distinct_values() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& [v, c] : entries_) out.push_back(v);
    return out;
}

std::vector<int> ValueMultiset::values_desc() const {
    std::vector<int> out;
    out.reserve(size_);
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        out.insert(out.end(), it->second, it->first);
    return out;
}

std::string ValueMultiset::to_string() const {
    return join_desc(values_desc());
}

ValueMultiset ValueMultiset::parse(const std::string& text) {
    return make(parse_int_list(text));
}

Partition make_partition(const std::vector<int>& raw) {
    return Partition::make(raw);
}

Integer aut_single(const Partition& p) {
    Integer result = 1;
    const auto& parts = p.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        result *= factorial(j - i);
        i = j;
    }
    return result;
}

Integer aut_profile_list(const std::vector<Partition>& profiles) {
    Integer result = 1;
    for (const auto& p : profiles) result *= aut_single(p);
    return result;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    // Standard descent: extend with parts no larger than the last one.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition::make(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> partitions_with_length(int n, int len, int min_part,
                                              int max_part) {
    std::vector<Partition> out;
    if (len < 0 || min_part < 1) return out;
    if (len == 0) {
        if (n == 0) out.push_back(Partition());
        return out;
    }
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int slots, int cap) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back(Partition::make(current));
            return;
        }
        int high = std::min(cap, remaining - min_part * (slots - 1));
        for (int part = high; part >= min_part; --part) {
            if (part * slots < remaining) break;
            current.push_back(part);
            self(self, remaining - part, slots - 1, part);
            current.pop_back();
        }
    };
    rec(rec, n, len, max_part);
    return out;
}

int rh_defect(int degree, int genus,
              const std::vector<Partition>& profiles) {
    if (degree < 1)
        throw ProfileDegreeMismatch("degree must be >= 1, got " +
                                    std::to_string(degree));
    int total = 2 * degree - 2 + 2 * genus;
    for (const auto& p : profiles) {
        if (p.sum() != degree)
            throw ProfileDegreeMismatch(
                "profile (" + p.to_string() + ") sums to " +
                std::to_string(p.sum()) + ", expected degree " +
                std::to_string(degree));
        total -= degree - p.length();
    }
    return total;
}

std::vector<Partition> pad_with_simple(int degree, int genus,
                                       std::vector<Partition> profiles) {
    int defect = rh_defect(degree, genus, profiles);
    if (defect < 0)
        throw OverRamified("profiles over-ramified by " +
                           std::to_string(-defect) +
                           " simple branch points");
    if (defect > 0 && degree < 2)
        throw DegreeTooSmall(
            "no simple profile exists at degree " + std::to_string(degree));
    if (defect > 0) {
        std::vector<int> simple(static_cast<size_t>(degree) - 1, 1);
        simple[0] = 2;
        Partition sp = Partition::make(simple);
        // Each simple profile lowers the defect by exactly one.
        profiles.insert(profiles.end(), defect, sp);
    }
    return profiles;
}

} // namespace covercount
