// Copyright 2026 The Subgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subgrover/register.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "subgrover/errors.h"

namespace subgrover {

namespace {

constexpr int kMaxLayoutQubits = 62;

Bits low_mask(int width) { return width >= 64 ? ~Bits{0} : (Bits{1} << width) - 1; }

SubgroupLayout build_layout(int n, int n0) {
    SubgroupLayout layout;
    layout.n = n;
    layout.n0 = n0;
    layout.eta = (n - n0) / 2;
    layout.tail_width = (n - n0) % 2;
    layout.stage_ranges.push_back({0, n0});
    int bit = n0;
    for (int i = 0; i < layout.eta; ++i, bit += 2) {
        layout.stage_ranges.push_back({bit, 2});
    }
    if (layout.tail_width != 0) {
        layout.stage_ranges.push_back({bit, 1});
    }
    return layout;
}

}  // namespace

int floor_log2(std::uint64_t v) {
    if (v == 0) {
        throw ArgumentError("floor_log2 of zero");
    }
    return 63 - std::countl_zero(v);
}

int SubgroupLayout::prefix_width(int k) const {
    if (k < 1 || k > stage_count()) {
        throw RangeError(fmt::format("stage index {} outside [1, {}]", k, stage_count()));
    }
    const StageRange &r = stage_ranges[static_cast<std::size_t>(k - 1)];
    return r.low_bit + r.width;
}

SubgroupLayout make_layout(int n, int marked_count) {
    if (n < 2 || n > kMaxLayoutQubits) {
        throw ArgumentError(fmt::format("qubit count {} outside [2, {}]", n, kMaxLayoutQubits));
    }
    if (marked_count < 1) {
        throw ArgumentError(fmt::format("marked count must be >= 1, got {}", marked_count));
    }
    const std::uint64_t four_m = 4 * static_cast<std::uint64_t>(marked_count);
    if (floor_log2(four_m) > n || four_m > (std::uint64_t{1} << n)) {
        throw SizeError(fmt::format("4M = {} exceeds 2^n = 2^{}", four_m, n));
    }
    const int n0 = std::max(2, floor_log2(four_m));
    return build_layout(n, n0);
}

SubgroupLayout make_layout_with_first_width(int n, int n0) {
    if (n < 1 || n > kMaxLayoutQubits || n0 < 1 || n0 > n) {
        throw ArgumentError(fmt::format("invalid grouping n={} n0={}", n, n0));
    }
    return build_layout(n, n0);
}

Bits stage_prefix(Bits item, const SubgroupLayout &layout, int k) {
    return item & low_mask(layout.prefix_width(k));
}

ValidationReport validate(const MarkedSet &marked, const SubgroupLayout &layout) {
    ValidationReport report;
    const int m = marked.size();
    if (marked.n != layout.n) {
        report.messages.push_back(
            fmt::format("marked set has {} qubits but layout has {}", marked.n, layout.n));
    }
    if (m < 1) {
        report.messages.push_back("marked set is empty");
    } else {
        const auto four_m = 4 * static_cast<std::uint64_t>(m);
        if (layout.n < 64 && four_m > (Bits{1} << layout.n)) {
            report.messages.push_back(fmt::format("4M = {} exceeds 2^{}", four_m, layout.n));
        } else if (std::max(2, floor_log2(four_m)) != layout.n0) {
            report.messages.push_back(fmt::format(
                "layout n0 = {} was not built for M = {}", layout.n0, m));
        }
    }
    const Bits full = low_mask(layout.n);
    for (int i = 0; i < m; ++i) {
        if ((marked.items[static_cast<std::size_t>(i)] & ~full) != 0) {
            report.messages.push_back(fmt::format("item {} does not fit in {} bits", i, layout.n));
        }
    }

    std::map<Bits, std::vector<int>> by_item;
    std::map<Bits, std::vector<int>> by_prefix;
    for (int i = 0; i < m; ++i) {
        const Bits item = marked.items[static_cast<std::size_t>(i)];
        by_item[item].push_back(i);
        by_prefix[item & low_mask(layout.n0)].push_back(i);
    }
    for (const auto &[item, idx] : by_item) {
        if (idx.size() > 1) {
            report.messages.push_back(fmt::format("duplicate item {} at indices {}",
                                                  format_bitstring(item, layout.n),
                                                  fmt::join(idx, ",")));
        }
    }
    for (const auto &[prefix, idx] : by_prefix) {
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                report.collisions.emplace_back(idx[a], idx[b]);
            }
        }
        if (idx.size() > 1) {
            report.messages.push_back(
                fmt::format("stage-1 part {} shared by items {}",
                            format_bitstring(prefix, layout.n0), fmt::join(idx, ",")));
        }
    }
    std::sort(report.collisions.begin(), report.collisions.end());
    report.ok = report.collisions.empty() && report.messages.empty();
    return report;
}

QubitPermutation QubitPermutation::identity(int n) {
    QubitPermutation p;
    p.source.resize(static_cast<std::size_t>(n));
    std::iota(p.source.begin(), p.source.end(), 0);
    return p;
}

bool QubitPermutation::is_identity() const {
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (source[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

Bits QubitPermutation::apply(Bits value) const {
    Bits out = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        out |= ((value >> source[i]) & 1U) << i;
    }
    return out;
}

Bits QubitPermutation::unapply(Bits value) const {
    Bits out = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        out |= ((value >> i) & 1U) << source[i];
    }
    return out;
}

QubitPermutation QubitPermutation::inverse() const {
    QubitPermutation inv;
    inv.source.resize(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        inv.source[static_cast<std::size_t>(source[i])] = static_cast<int>(i);
    }
    return inv;
}

MarkedSet permute(const MarkedSet &marked, const QubitPermutation &perm) {
    MarkedSet out{marked.n, {}};
    out.items.reserve(marked.items.size());
    for (Bits item : marked.items) {
        out.items.push_back(perm.apply(item));
    }
    return out;
}

QubitPermutation find_distinct_permutation(const MarkedSet &marked, int n, int marked_count) {
    const SubgroupLayout layout = make_layout(n, marked_count);
    const int n0 = layout.n0;

    // Lexicographic walk over n0-subsets of {0..n-1}, starting at {0..n0-1}.
    std::vector<int> combo(static_cast<std::size_t>(n0));
    std::iota(combo.begin(), combo.end(), 0);
    std::unordered_set<Bits> seen;
    while (true) {
        seen.clear();
        bool separated = true;
        for (Bits item : marked.items) {
            Bits part = 0;
            for (int i = 0; i < n0; ++i) {
                part |= ((item >> combo[static_cast<std::size_t>(i)]) & 1U) << i;
            }
            if (!seen.insert(part).second) {
                separated = false;
                break;
            }
        }
        if (separated) {
            QubitPermutation perm;
            perm.source = combo;
            for (int q = 0; q < n; ++q) {
                if (!std::binary_search(combo.begin(), combo.end(), q)) {
                    perm.source.push_back(q);
                }
            }
            return perm;
        }
        int i = n0 - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - n0 + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n0; ++j) {
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw NotFoundError(
        fmt::format("no {}-qubit subset separates all {} marked items", n0, marked.size()));
}

Bits parse_bitstring(std::string_view text, int n) {
    if (text.empty()) {
        throw ArgumentError("empty bitstring");
    }
    const bool prefixed = text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B');
    const bool bare_binary = !prefixed && static_cast<int>(text.size()) == n &&
                             text.find_first_not_of("01") == std::string_view::npos;
    Bits value = 0;
    if (prefixed || bare_binary) {
        std::string_view digits = prefixed ? text.substr(2) : text;
        if (static_cast<int>(digits.size()) > n) {
            throw ArgumentError(fmt::format("bitstring '{}' longer than {} bits", text, n));
        }
        for (char c : digits) {
            if (c != '0' && c != '1') {
                throw ArgumentError(fmt::format("invalid binary digit in '{}'", text));
            }
            value = (value << 1) | static_cast<Bits>(c - '0');
        }
        return value;
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ArgumentError(fmt::format("cannot parse '{}' as a bitstring or integer", text));
    }
    if (n < 64 && value >= (Bits{1} << n)) {
        throw ArgumentError(fmt::format("value {} does not fit in {} bits", value, n));
    }
    return value;
}

std::string format_bitstring(Bits value, int n) {
    std::string out = "0b";
    out.reserve(static_cast<std::size_t>(n) + 2);
    for (int i = n - 1; i >= 0; --i) {
        out.push_back(((value >> i) & 1U) != 0 ? '1' : '0');
    }
    return out;
}

}  // namespace subgrover
