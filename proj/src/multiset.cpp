#include "apartition/multiset.hpp"

#include <limits>
#include <stdexcept>

namespace apartition {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("multiplicity overflow");
    return r;
}

}  // namespace

IntegerMultiset IntegerMultiset::from_counts(std::map<std::uint64_t, std::uint64_t> counts) {
    IntegerMultiset a;
    a.kind_ = Kind::Explicit;
    for (auto it = counts.begin(); it != counts.end();) {
        if (it->first == 0) throw std::invalid_argument("multiset element must be >= 1");
        it = it->second == 0 ? counts.erase(it) : std::next(it);
    }
    a.counts_ = std::move(counts);
    return a;
}

IntegerMultiset IntegerMultiset::naturals() {
    IntegerMultiset a;
    a.kind_ = Kind::Naturals;
    return a;
}

IntegerMultiset IntegerMultiset::plane() {
    IntegerMultiset a;
    a.kind_ = Kind::Plane;
    return a;
}

IntegerMultiset IntegerMultiset::k_regular(std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("kregular requires k >= 2");
    IntegerMultiset a;
    a.kind_ = Kind::KRegular;
    a.param_ = k;
    return a;
}

IntegerMultiset IntegerMultiset::m_color(std::uint64_t m, IntegerMultiset base) {
    if (m < 1) throw std::invalid_argument("mcolor requires m >= 1");
    IntegerMultiset a;
    a.kind_ = Kind::MColor;
    a.param_ = m;
    a.base_ = std::make_shared<const IntegerMultiset>(std::move(base));
    return a;
}

bool IntegerMultiset::finite() const {
    switch (kind_) {
        case Kind::Explicit: return true;
        case Kind::MColor: return base_->finite();
        default: return false;
    }
}

std::uint64_t IntegerMultiset::multiplicity(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("multiset elements start at 1");
    switch (kind_) {
        case Kind::Explicit: {
            auto it = counts_.find(a);
            return it == counts_.end() ? 0 : it->second;
        }
        case Kind::Naturals: return 1;
        case Kind::Plane: return a;
        case Kind::KRegular: return a % param_ == 0 ? 0 : 1;
        case Kind::MColor: return checked_mul(param_, base_->multiplicity(a));
    }
    return 0;
}

std::uint64_t IntegerMultiset::sigma(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("sigma is defined for i >= 1");
    unsigned __int128 total = 0;
    if (kind_ == Kind::Explicit) {
        for (const auto& [elem, mu] : counts_) {
            if (elem > i) break;
            if (i % elem == 0) total += static_cast<unsigned __int128>(elem) * mu;
        }
    } else {
        for (std::uint64_t d = 1; d * d <= i; ++d) {
            if (i % d != 0) continue;
            total += static_cast<unsigned __int128>(d) * multiplicity(d);
            std::uint64_t e = i / d;
            if (e != d) total += static_cast<unsigned __int128>(e) * multiplicity(e);
        }
    }
    if (total > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("sigma overflow");
    return static_cast<std::uint64_t>(total);
}

IntegerMultiset IntegerMultiset::truncate(std::uint64_t bound) const {
    if (bound == 0) throw std::invalid_argument("truncate bound must be >= 1");
    std::map<std::uint64_t, std::uint64_t> out;
    switch (kind_) {
        case Kind::Explicit:
            for (const auto& [elem, mu] : counts_) {
                if (elem > bound) break;
                out.emplace(elem, mu);
            }
            break;
        case Kind::MColor: {
            IntegerMultiset t = base_->truncate(bound);
            for (const auto& [elem, mu] : t.counts_) out.emplace(elem, checked_mul(param_, mu));
            break;
        }
        default:
            for (std::uint64_t a = 1; a <= bound; ++a) {
                std::uint64_t mu = multiplicity(a);
                if (mu != 0) out.emplace(a, mu);
            }
            break;
    }
    return from_counts(std::move(out));
}

std::string IntegerMultiset::spec() const {
    switch (kind_) {
        case Kind::Explicit: {
            std::string s;
            for (const auto& [elem, mu] : counts_)
                for (std::uint64_t i = 0; i < mu; ++i) {
                    if (!s.empty()) s += ',';
                    s += std::to_string(elem);
                }
            return s;
        }
        case Kind::Naturals: return "naturals";
        case Kind::Plane: return "plane";
        case Kind::KRegular: return "kregular:" + std::to_string(param_);
        case Kind::MColor: return "mcolor:" + std::to_string(param_) + ":" + base_->spec();
    }
    return {};
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("multiset spec: " + what + " at position " +
                                    std::to_string(pos) + " in '" + std::string(text) + "'");
    }

    bool try_keyword(std::string_view kw) {
        if (text.substr(pos, kw.size()) == kw) {
            pos += kw.size();
            return true;
        }
        return false;
    }

    std::uint64_t parse_int() {
        if (done() || peek() < '0' || peek() > '9') fail("expected integer");
        std::uint64_t v = 0;
        std::size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') {
            std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer too large");
            v = v * 10 + digit;
            ++pos;
        }
        if (v == 0) {
            pos = start;
            fail("element must be >= 1");
        }
        return v;
    }
};

IntegerMultiset parse_spec(Cursor& cur) {
    if (cur.done()) cur.fail("expected multiset spec");
    char c = cur.peek();
    if (c >= '0' && c <= '9') {
        std::map<std::uint64_t, std::uint64_t> counts;
        ++counts[cur.parse_int()];
        while (!cur.done() && cur.peek() == ',') {
            ++cur.pos;
            ++counts[cur.parse_int()];
        }
        return IntegerMultiset::from_counts(std::move(counts));
    }
    if (cur.try_keyword("naturals")) return IntegerMultiset::naturals();
    if (cur.try_keyword("plane")) return IntegerMultiset::plane();
    if (cur.try_keyword("kregular:")) {
        std::size_t at = cur.pos;
        std::uint64_t k = cur.parse_int();
        if (k < 2) {
            cur.pos = at;
            cur.fail("kregular requires k >= 2");
        }
        return IntegerMultiset::k_regular(k);
    }
    if (cur.try_keyword("mcolor:")) {
        std::uint64_t m = cur.parse_int();
        if (cur.done() || cur.peek() != ':') cur.fail("expected ':' after mcolor multiplier");
        ++cur.pos;
        return IntegerMultiset::m_color(m, parse_spec(cur));
    }
    cur.fail("expected multiset spec");
}

}  // namespace

IntegerMultiset IntegerMultiset::parse(std::string_view text) {
    Cursor cur{text};
    IntegerMultiset a = parse_spec(cur);
    if (!cur.done()) cur.fail("trailing input");
    return a;
}

const std::map<std::uint64_t, std::uint64_t>& IntegerMultiset::counts() const {
    if (kind_ != Kind::Explicit)
        throw std::logic_error("counts() requires an explicit multiset; truncate() first");
    return counts_;
}

bool IntegerMultiset::operator==(const IntegerMultiset& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Explicit: return counts_ == other.counts_;
        case Kind::KRegular: return param_ == other.param_;
        case Kind::MColor: return param_ == other.param_ && *base_ == *other.base_;
        default: return true;
    }
}

}  // namespace apartition
