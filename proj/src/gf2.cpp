#include "spectral/gf2.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace spectral {

int max_vars() {
    static const int cap = [] {
        int v = kMaxVars;
        if (const char* s = std::getenv("SPECTRAL_PDT_MAX_N")) {
            const int parsed = std::atoi(s);
            if (parsed >= 1 && parsed < v) v = parsed;
        }
        return v;
    }();
    return cap;
}

LinearForm Gf2Basis::reduce(LinearForm v) const {
    for (const LinearForm row : rows) {
        if (v & (LinearForm{1} << leading_bit(row))) v ^= row;
    }
    return v;
}

std::uint32_t Gf2Basis::coords(LinearForm v) const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (v & (LinearForm{1} << leading_bit(rows[i]))) {
            v ^= rows[i];
            c |= std::uint32_t{1} << i;
        }
    }
    if (v != 0) throw std::invalid_argument("coords: form not in span");
    return c;
}

namespace {

void check_forms(std::span<const LinearForm> forms, int n) {
    if (n < 0 || n > max_vars()) throw std::invalid_argument("bad ambient dimension");
    const LinearForm limit = (n >= 32) ? ~LinearForm{0} : (LinearForm{1} << n) - 1;
    for (const LinearForm f : forms) {
        if (f & ~limit) throw std::invalid_argument("form exceeds ambient dimension");
    }
}

// Inserts one form into a fully reduced row list kept in decreasing
// leading-bit order; the parallel aug list carries the affine values.
// Returns the index of the new row, or -1 when the form reduced to zero.
int insert_row(std::vector<LinearForm>& rows, std::vector<int>* aug,
               LinearForm form, int value) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (form & (LinearForm{1} << leading_bit(rows[i]))) {
            form ^= rows[i];
            if (aug) value ^= (*aug)[i];
        }
    }
    if (form == 0) return value ? -2 : -1;  // -2: inconsistent with aug
    const int lead = leading_bit(form);
    // Back-substitute so the new leading bit disappears from older rows.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] & (LinearForm{1} << lead)) {
            rows[i] ^= form;
            if (aug) (*aug)[i] ^= value;
        }
    }
    auto pos = std::upper_bound(rows.begin(), rows.end(), form,
                                [](LinearForm a, LinearForm b) {
                                    return leading_bit(a) > leading_bit(b);
                                });
    const int idx = static_cast<int>(pos - rows.begin());
    rows.insert(pos, form);
    if (aug) aug->insert(aug->begin() + idx, value);
    return idx;
}

}  // namespace

Gf2Basis row_reduce(std::span<const LinearForm> forms, int n) {
    check_forms(forms, n);
    Gf2Basis basis;
    basis.ambient_n = n;
    for (const LinearForm f : forms) insert_row(basis.rows, nullptr, f, 0);
    return basis;
}

int gf2_rank(std::span<const LinearForm> forms, int n) {
    return row_reduce(forms, n).rank();
}

bool in_span(LinearForm v, const Gf2Basis& basis) {
    return basis.reduce(v) == 0;
}

std::vector<CosetClass> coset_partition(std::span<const LinearForm> support,
                                        const Gf2Basis& basis) {
    std::map<LinearForm, std::vector<LinearForm>> classes;
    for (const LinearForm f : support) classes[basis.reduce(f)].push_back(f);
    std::vector<CosetClass> out;
    out.reserve(classes.size());
    for (auto& [residue, members] : classes) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(CosetClass{members.front(), std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const CosetClass& a, const CosetClass& b) {
        return a.representative < b.representative;
    });
    return out;
}

std::vector<LinearForm> extend_to_full_basis(const Gf2Basis& basis) {
    const int n = basis.ambient_n;
    std::uint32_t covered = 0;
    for (const LinearForm row : basis.rows) covered |= LinearForm{1} << leading_bit(row);
    std::vector<LinearForm> full(basis.rows.begin(), basis.rows.end());
    for (int p = n - 1; p >= 0; --p) {
        if (!(covered & (LinearForm{1} << p))) full.push_back(LinearForm{1} << p);
    }
    return full;
}

std::optional<std::uint32_t> solve_affine_point(
    std::span<const std::pair<LinearForm, int>> constraints, int n) {
    std::vector<LinearForm> rows;
    std::vector<int> aug;
    for (const auto& [form, value] : constraints) {
        check_forms({&form, 1}, n);
        if (insert_row(rows, &aug, form, value & 1) == -2) return std::nullopt;
    }
    // Fully reduced rows: the solution just places each value at its
    // row's leading bit, free coordinates stay zero.
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (aug[i]) x |= std::uint32_t{1} << leading_bit(rows[i]);
    }
    return x;
}

}  // namespace spectral
