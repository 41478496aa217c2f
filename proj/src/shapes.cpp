#include <grothmn/shapes.hpp>

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <set>

#include <grothmn/error.hpp>

namespace grothmn
{

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw invalid_input("partition parts must be non-negative");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw invalid_input("partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (int p : parts_) {
        size_ += p;
    }
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> parts;
    if (text.empty()) {
        return Partition{};
    }
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw invalid_input("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int n) const
{
    if (length() > n) {
        throw invalid_input("partition " + str() + " has more than " + std::to_string(n) + " parts");
    }
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

bool Partition::contains(const Partition &inner) const noexcept
{
    if (inner.length() > length()) {
        return false;
    }
    for (int i = 1; i <= inner.length(); ++i) {
        if (inner.row(i) > row(i)) {
            return false;
        }
    }
    return true;
}

std::string Partition::str() const
{
    return "(" + csv() + ")";
}

std::string Partition::csv() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool GradedLex::operator()(const Partition &a, const Partition &b) const noexcept
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
{
    if (!outer_.contains(inner_)) {
        throw invalid_input("inner partition " + inner_.str() + " is not contained in " + outer_.str());
    }
}

bool SkewShape::contains(Cell c) const noexcept
{
    return c.row >= 1 && c.col > inner_.row(c.row) && c.col <= outer_.row(c.row);
}

std::vector<Cell> SkewShape::cells() const
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 1; i <= outer_.length(); ++i) {
        for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

int SkewShape::top_row() const noexcept
{
    for (int i = 1; i <= outer_.length(); ++i) {
        if (outer_.row(i) > inner_.row(i)) {
            return i;
        }
    }
    return 0;
}

int SkewShape::bottom_row() const noexcept
{
    for (int i = outer_.length(); i >= 1; --i) {
        if (outer_.row(i) > inner_.row(i)) {
            return i;
        }
    }
    return 0;
}

std::string SkewShape::str() const
{
    return outer_.str() + "/" + inner_.str();
}

SkewShape skew(const Partition &outer, const Partition &inner)
{
    return SkewShape(outer, inner);
}

ShapeStats shape_stats(const SkewShape &s)
{
    ShapeStats st;
    st.size = s.size();
    const auto cells = s.cells();
    std::set<int> cols;
    for (int i = 1; i <= s.outer().length(); ++i) {
        if (s.outer().row(i) > s.inner().row(i)) {
            ++st.rows_occupied;
        }
    }
    for (const auto &c : cells) {
        cols.insert(c.col);
    }
    st.cols_occupied = static_cast<int>(cols.size());

    if (cells.empty()) {
        return st;
    }
    // Flood fill from the first cell over edge-adjacent cells.
    std::set<Cell> seen{cells.front()};
    std::deque<Cell> queue{cells.front()};
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        const Cell nbrs[] = {{c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
        for (const auto &d : nbrs) {
            if (s.contains(d) && seen.insert(d).second) {
                queue.push_back(d);
            }
        }
    }
    st.connected = seen.size() == cells.size();
    return st;
}

bool is_ribbon(const SkewShape &s)
{
    if (s.empty() || !shape_stats(s).connected) {
        return false;
    }
    for (const auto &c : s.cells()) {
        if (s.contains({c.row, c.col + 1}) && s.contains({c.row + 1, c.col}) && s.contains({c.row + 1, c.col + 1})) {
            return false;
        }
    }
    return true;
}

int height(const SkewShape &s)
{
    if (!is_ribbon(s)) {
        throw invalid_input("height is only defined for ribbons, got " + s.str());
    }
    return shape_stats(s).rows_occupied - 1;
}

Partition max_nw_ribbon_outer(const SkewShape &s)
{
    if (s.empty() || !shape_stats(s).connected) {
        throw invalid_input("maximal northwest ribbon needs a connected nonempty shape, got " + s.str());
    }
    const auto &nu = s.outer();
    const auto &lambda = s.inner();
    std::vector<int> mu(static_cast<std::size_t>(nu.length()));
    for (int i = 1; i <= nu.length(); ++i) {
        mu[static_cast<std::size_t>(i - 1)] = i == 1 ? nu.row(1) : std::min(nu.row(i), lambda.row(i - 1) + 1);
    }
    return Partition(std::move(mu));
}

int max_nw_ribbon_size(const SkewShape &s)
{
    return max_nw_ribbon_outer(s).size() - s.inner().size();
}

namespace
{

void check_mn_args(const Partition &lambda, int k, int n)
{
    if (k < 1) {
        throw invalid_input("k must be at least 1");
    }
    if (n < 1) {
        throw invalid_input("n must be at least 1");
    }
    if (!lambda.fits_in(n)) {
        throw invalid_input("partition " + lambda.str() + " is not in P[" + std::to_string(n) + "]");
    }
}

} // namespace

std::vector<Partition> enumerate_mn_outer(const Partition &lambda, int k, int n)
{
    check_mn_args(lambda, k, n);
    const auto lam = lambda.padded(n);
    auto at = [&](int i) { return lam[static_cast<std::size_t>(i - 1)]; };

    std::vector<Partition> out;
    std::vector<int> nu(lam);
    // A connected skew shape occupies a contiguous block of rows top..bottom,
    // and spans columns inner[bottom]+1 .. nu[top].
    for (int top = 1; top <= n; ++top) {
        for (int bottom = top; bottom <= n; ++bottom) {
            const int col_cap = at(bottom) + k;
            std::function<void(int)> fill = [&](int i) {
                if (i > bottom) {
                    Partition cand(nu);
                    SkewShape sh(cand, lambda);
                    const auto st = shape_stats(sh);
                    if (st.connected && st.cols_occupied <= k && max_nw_ribbon_size(sh) >= k) {
                        out.push_back(std::move(cand));
                    }
                    return;
                }
                int lo = at(i) + 1;
                int hi = col_cap;
                if (i > top) {
                    lo = std::max(lo, at(i - 1) + 1);
                    hi = std::min(hi, nu[static_cast<std::size_t>(i - 2)]);
                } else if (i > 1) {
                    hi = std::min(hi, at(i - 1));
                }
                for (int v = lo; v <= hi; ++v) {
                    nu[static_cast<std::size_t>(i - 1)] = v;
                    fill(i + 1);
                }
                nu[static_cast<std::size_t>(i - 1)] = at(i);
            };
            fill(top);
        }
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

std::vector<Partition> enumerate_mn_outer_row(const Partition &lambda, int k, int n, int j)
{
    if (j < 1 || j > n) {
        throw invalid_input("row index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    }
    auto all = enumerate_mn_outer(lambda, k, n);
    std::vector<Partition> out;
    for (auto &nu : all) {
        if (SkewShape(nu, lambda).bottom_row() == j) {
            out.push_back(std::move(nu));
        }
    }
    return out;
}

std::vector<Partition> enumerate_ribbon_outer(const Partition &lambda, int k, int n)
{
    check_mn_args(lambda, k, n);
    const auto lam = lambda.padded(n);
    std::vector<int> nu(lam);
    std::vector<Partition> out;
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int remaining) {
        if (i == lam.size()) {
            if (remaining == 0) {
                Partition cand(nu);
                if (is_ribbon(SkewShape(cand, lambda))) {
                    out.push_back(std::move(cand));
                }
            }
            return;
        }
        int hi = lam[i] + remaining;
        if (i > 0) {
            hi = std::min(hi, nu[i - 1]);
        }
        for (int v = lam[i]; v <= hi; ++v) {
            nu[i] = v;
            fill(i + 1, remaining - (v - lam[i]));
        }
        nu[i] = lam[i];
    };
    fill(0, k);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

std::vector<Partition> partitions_of(int m, int n, int max_part)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == n) {
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    if (m >= 0) {
        rec(m, max_part < 0 ? m : max_part);
    }
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols, int max_size)
{
    std::vector<Partition> out;
    const int top = max_size < 0 ? rows * cols : std::min(max_size, rows * cols);
    for (int m = 0; m <= top; ++m) {
        auto layer = partitions_of(m, rows, cols);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace grothmn
