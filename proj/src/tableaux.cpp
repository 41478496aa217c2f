#include <grothmn/tableaux.hpp>

#include <algorithm>
#include <charconv>

#include <grothmn/error.hpp>

namespace grothmn
{

int HookEntry::max() const noexcept
{
    int m = head;
    if (!arm.empty()) {
        m = std::max(m, arm.back());
    }
    if (!leg.empty()) {
        m = std::max(m, leg.back());
    }
    return m;
}

bool HookEntry::valid() const noexcept
{
    if (head < 1) {
        return false;
    }
    int prev = head;
    for (int v : arm) {
        if (v < prev) {
            return false;
        }
        prev = v;
    }
    prev = head;
    for (int v : leg) {
        if (v <= prev) {
            return false;
        }
        prev = v;
    }
    return true;
}

HookValuedTableau::HookValuedTableau(std::vector<std::vector<HookEntry>> rows) : rows_(std::move(rows))
{
    std::vector<int> lengths;
    for (const auto &r : rows_) {
        if (r.empty()) {
            throw invalid_input("tableau rows must be nonempty");
        }
        lengths.push_back(static_cast<int>(r.size()));
    }
    shape_ = Partition(std::move(lengths));
}

const HookEntry &HookValuedTableau::at(Cell c) const
{
    if (c.row < 1 || c.row > shape_.length() || c.col < 1 || c.col > shape_.row(c.row)) {
        throw invalid_input("cell outside the tableau shape");
    }
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
}

bool is_valid(const HookValuedTableau &t)
{
    const auto &rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const auto &e = rows[i][j];
            if (!e.valid()) {
                return false;
            }
            if (j > 0 && rows[i][j - 1].max() > e.min()) {
                return false;
            }
            if (i > 0 && rows[i - 1][j].max() >= e.min()) {
                return false;
            }
        }
    }
    return true;
}

TableauStats statistics(const HookValuedTableau &t, int n)
{
    TableauStats st;
    st.weight.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
    auto count = [&](int v) {
        if (v < 1 || v > n) {
            throw invalid_input("tableau entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        ++st.weight[static_cast<std::size_t>(v - 1)];
    };
    for (const auto &row : t.rows()) {
        for (const auto &e : row) {
            count(e.head);
            for (int v : e.arm) {
                count(v);
            }
            for (int v : e.leg) {
                count(v);
            }
            st.arm_total += static_cast<int>(e.arm.size());
            st.leg_total += static_cast<int>(e.leg.size());
        }
    }
    st.total_entries = t.shape().size() + st.arm_total + st.leg_total;
    return st;
}

// Backtracking over cells in row-major order. Each cell only has to respect
// its left neighbour (weakly) and its upper neighbour (strictly), and both
// comparisons only look at that neighbour's max.
class TableauEnumerator
{
public:
    TableauEnumerator(const Partition &lambda, int n, TableauFamily family, std::optional<int> cap,
                      const std::function<void(const HookValuedTableau &)> &visit)
        : n_(n), family_(family), cap_(cap), visit_(visit)
    {
        for (int len : lambda.parts()) {
            tableau_.rows_.emplace_back(static_cast<std::size_t>(len));
        }
        tableau_.shape_ = lambda;
        for (int i = 1; i <= lambda.length(); ++i) {
            for (int j = 1; j <= lambda.row(i); ++j) {
                cells_.push_back({i, j});
            }
        }
    }

    void run()
    {
        const int cells = static_cast<int>(cells_.size());
        if (cap_ && *cap_ < cells) {
            return;
        }
        place(0, 0);
    }

private:
    HookEntry &entry(Cell c)
    {
        return tableau_.rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }

    void place(std::size_t idx, int used)
    {
        if (idx == cells_.size()) {
            visit_(tableau_);
            return;
        }
        const Cell c = cells_[idx];
        int lo = 1;
        if (c.col > 1) {
            lo = std::max(lo, entry({c.row, c.col - 1}).max());
        }
        if (c.row > 1) {
            lo = std::max(lo, entry({c.row - 1, c.col}).max() + 1);
        }
        // Entries available beyond the head of this box, after reserving one
        // per remaining box.
        const int remaining_boxes = static_cast<int>(cells_.size() - idx - 1);
        const int budget = cap_ ? *cap_ - used - 1 - remaining_boxes : n_;
        if (budget < 0) {
            return;
        }
        auto &e = entry(c);
        for (int h = lo; h <= n_; ++h) {
            e.head = h;
            e.arm.clear();
            e.leg.clear();
            extend_arm(idx, used, h, budget);
        }
        e.arm.clear();
        e.leg.clear();
    }

    void extend_arm(std::size_t idx, int used, int from, int budget)
    {
        auto &e = entry(cells_[idx]);
        extend_leg(idx, used, e.head + 1, budget);
        if (family_ != TableauFamily::hvt || budget == 0) {
            return;
        }
        for (int v = from; v <= n_; ++v) {
            e.arm.push_back(v);
            extend_arm(idx, used, v, budget - 1);
            e.arm.pop_back();
        }
    }

    void extend_leg(std::size_t idx, int used, int from, int budget)
    {
        auto &e = entry(cells_[idx]);
        place(idx + 1, used + e.entry_count());
        if (family_ == TableauFamily::ssyt || budget == 0) {
            return;
        }
        for (int v = from; v <= n_; ++v) {
            e.leg.push_back(v);
            extend_leg(idx, used, v + 1, budget - 1);
            e.leg.pop_back();
        }
    }

    int n_;
    TableauFamily family_;
    std::optional<int> cap_;
    const std::function<void(const HookValuedTableau &)> &visit_;
    HookValuedTableau tableau_;
    std::vector<Cell> cells_;
};

void for_each_tableau(const Partition &lambda, int n, TableauFamily family, std::optional<int> cap,
                      const std::function<void(const HookValuedTableau &)> &visit)
{
    if (family == TableauFamily::hvt && !cap) {
        throw invalid_input("hook-valued tableaux need an entry cap");
    }
    if (n < 0) {
        throw invalid_input("entry bound must be non-negative");
    }
    TableauEnumerator(lambda, n, family, cap, visit).run();
}

std::uint64_t count_tableaux(const Partition &lambda, int n, TableauFamily family, std::optional<int> cap)
{
    std::uint64_t count = 0;
    for_each_tableau(lambda, n, family, cap, [&](const HookValuedTableau &) { ++count; });
    return count;
}

namespace
{

std::vector<HookValuedTableau> collect(const Partition &lambda, int n, TableauFamily family, std::optional<int> cap)
{
    std::vector<HookValuedTableau> out;
    for_each_tableau(lambda, n, family, cap, [&](const HookValuedTableau &t) { out.push_back(t); });
    return out;
}

bool needs_commas(const HookEntry &e)
{
    auto big = [](int v) { return v > 9; };
    return std::any_of(e.arm.begin(), e.arm.end(), big) || std::any_of(e.leg.begin(), e.leg.end(), big);
}

void write_values(std::string &out, const std::vector<int> &values, bool commas)
{
    for (int v : values) {
        out += std::to_string(v);
        if (commas) {
            out += ',';
        }
    }
}

int parse_int(std::string_view s, std::string_view context)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw invalid_input("malformed tableau token '" + std::string(context) + "'");
    }
    return v;
}

std::vector<int> parse_values(std::string_view part, std::string_view context)
{
    std::vector<int> out;
    if (part.find(',') != std::string_view::npos) {
        while (!part.empty()) {
            auto comma = part.find(',');
            if (comma == std::string_view::npos) {
                throw invalid_input("malformed tableau token '" + std::string(context) + "'");
            }
            out.push_back(parse_int(part.substr(0, comma), context));
            part.remove_prefix(comma + 1);
        }
        return out;
    }
    for (char ch : part) {
        if (ch < '0' || ch > '9') {
            throw invalid_input("malformed tableau token '" + std::string(context) + "'");
        }
        out.push_back(ch - '0');
    }
    return out;
}

HookEntry parse_entry(std::string_view token)
{
    HookEntry e;
    auto open = token.find('(');
    if (open == std::string_view::npos) {
        e.head = parse_int(token, token);
        return e;
    }
    auto bar = token.find('|', open);
    if (token.back() != ')' || bar == std::string_view::npos) {
        throw invalid_input("malformed tableau token '" + std::string(token) + "'");
    }
    e.head = parse_int(token.substr(0, open), token);
    e.arm = parse_values(token.substr(open + 1, bar - open - 1), token);
    e.leg = parse_values(token.substr(bar + 1, token.size() - bar - 2), token);
    return e;
}

} // namespace

std::vector<HookValuedTableau> enumerate_ssyt(const Partition &lambda, int n)
{
    return collect(lambda, n, TableauFamily::ssyt, std::nullopt);
}

std::vector<HookValuedTableau> enumerate_svt(const Partition &lambda, int n)
{
    return collect(lambda, n, TableauFamily::svt, std::nullopt);
}

std::vector<HookValuedTableau> enumerate_hvt_capped(const Partition &lambda, int n, int cap)
{
    return collect(lambda, n, TableauFamily::hvt, cap);
}

std::string to_text(const HookValuedTableau &t)
{
    std::string out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i) {
            out += '/';
        }
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j) {
                out += ' ';
            }
            const auto &e = t.rows()[i][j];
            out += std::to_string(e.head);
            if (e.arm.empty() && e.leg.empty()) {
                continue;
            }
            const bool commas = needs_commas(e);
            out += '(';
            write_values(out, e.arm, commas);
            out += '|';
            write_values(out, e.leg, commas);
            out += ')';
        }
    }
    return out;
}

HookValuedTableau parse_tableau(std::string_view text)
{
    std::vector<std::vector<HookEntry>> rows;
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return HookValuedTableau{};
    }
    while (true) {
        auto slash = text.find('/');
        auto row_text = text.substr(0, slash);
        std::vector<HookEntry> row;
        while (!row_text.empty()) {
            auto space = row_text.find(' ');
            auto token = row_text.substr(0, space);
            if (!token.empty()) {
                row.push_back(parse_entry(token));
            }
            if (space == std::string_view::npos) {
                break;
            }
            row_text.remove_prefix(space + 1);
        }
        rows.push_back(std::move(row));
        if (slash == std::string_view::npos) {
            break;
        }
        text.remove_prefix(slash + 1);
    }
    return HookValuedTableau(std::move(rows));
}

} // namespace grothmn
