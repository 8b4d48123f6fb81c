#include "knotlike/polynomial.hpp"

#include <bit>
#include <sstream>

#include "knotlike/error.hpp"

namespace knotlike {

Poly Poly::monomial(int degree) {
    if (degree < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
    Poly p;
    p.flip(degree);
    return p;
}

Poly Poly::from_bits(std::uint64_t bits) {
    Poly p;
    if (bits) p.words_.push_back(bits);
    return p;
}

int Poly::degree() const {
    if (words_.empty()) return -1;
    const auto top = words_.back();
    return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(top);
}

bool Poly::coeff(int k) const {
    if (k < 0) return false;
    const auto w = static_cast<std::size_t>(k) / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (k % 64)) & 1u;
}

void Poly::flip(int k) {
    const auto w = static_cast<std::size_t>(k) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (k % 64);
    trim();
}

void Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

namespace {

// p * t^k
Poly shifted(const Poly& p, int k) {
    Poly out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i)) out += Poly::monomial(i + k);
    }
    return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (int i = 0; i <= a.degree(); ++i) {
        if (!a.coeff(i)) continue;
        const int word_shift = i / 64;
        const int bit_shift = i % 64;
        for (std::size_t j = 0; j < b.words_.size(); ++j) {
            out.words_[j + word_shift] ^= b.words_[j] << bit_shift;
            if (bit_shift) out.words_[j + word_shift + 1] ^= b.words_[j] >> (64 - bit_shift);
        }
    }
    out.trim();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::Internal, "polynomial division by zero");
    Poly q;
    Poly r = a;
    const int db = b.degree();
    while (r.degree() >= db) {
        const int k = r.degree() - db;
        q.flip(k);
        r += shifted(b, k);
    }
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (!coeff(k)) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += "1";
        } else if (k == 1) {
            out += "t";
        } else {
            out += "t^" + std::to_string(k);
        }
    }
    return out;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : cells_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

bool PolyMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

bool PolyMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

void PolyMatrix::add_row(std::size_t r, std::size_t s, const Poly& c) {
    if (c.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!at(s, j).is_zero()) at(r, j) += c * at(s, j);
    }
}

void PolyMatrix::add_col(std::size_t r, std::size_t s, const Poly& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!at(i, s).is_zero()) at(i, r) += c * at(i, s);
    }
}

void PolyMatrix::swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(s, j));
}

void PolyMatrix::swap_cols(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, r), at(i, s));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::Internal, "matrix dimension mismatch");
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
            }
        }
    }
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

std::vector<Poly> SmithForm::invariant_factors() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < diag.rows() && i < diag.cols(); ++i) {
        if (!diag.at(i, i).is_zero()) out.push_back(diag.at(i, i));
    }
    return out;
}

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const PolyMatrix& m) {
        f_.diag = m;
        f_.left = f_.left_inv = PolyMatrix::identity(m.rows());
        f_.right = f_.right_inv = PolyMatrix::identity(m.cols());
    }

    SmithForm run() {
        PolyMatrix& d = f_.diag;
        const std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t k = 0; k < n; ++k) {
            if (!settle(k)) break;
        }
        return std::move(f_);
    }

private:
    // row r += c * row s, keeping m = left * diag * right.
    void row_add(std::size_t r, std::size_t s, const Poly& c) {
        f_.diag.add_row(r, s, c);
        f_.left_inv.add_row(r, s, c);
        f_.left.add_col(s, r, c);
    }

    // col r += c * col s
    void col_add(std::size_t r, std::size_t s, const Poly& c) {
        f_.diag.add_col(r, s, c);
        f_.right_inv.add_col(r, s, c);
        f_.right.add_row(s, r, c);
    }

    void row_swap(std::size_t r, std::size_t s) {
        f_.diag.swap_rows(r, s);
        f_.left_inv.swap_rows(r, s);
        f_.left.swap_cols(r, s);
    }

    void col_swap(std::size_t r, std::size_t s) {
        f_.diag.swap_cols(r, s);
        f_.right_inv.swap_cols(r, s);
        f_.right.swap_rows(r, s);
    }

    // Brings a minimal-degree entry of the trailing block to (k, k) and clears
    // row and column k. Returns false if the trailing block is zero.
    bool settle(std::size_t k) {
        PolyMatrix& d = f_.diag;
        for (;;) {
            std::size_t bi = 0, bj = 0;
            int best = -1;
            for (std::size_t i = k; i < d.rows(); ++i) {
                for (std::size_t j = k; j < d.cols(); ++j) {
                    const int deg = d.at(i, j).degree();
                    if (deg >= 0 && (best < 0 || deg < best)) {
                        best = deg;
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (best < 0) return false;
            row_swap(k, bi);
            col_swap(k, bj);

            bool clean = true;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k).is_zero()) continue;
                row_add(i, k, Poly::divmod(d.at(i, k), d.at(k, k)).first);
                clean = clean && d.at(i, k).is_zero();
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j).is_zero()) continue;
                col_add(j, k, Poly::divmod(d.at(k, j), d.at(k, k)).first);
                clean = clean && d.at(k, j).is_zero();
            }
            if (!clean) continue;

            // Divisibility: pull an offending row into row k and reduce again.
            bool divisible = true;
            for (std::size_t i = k + 1; i < d.rows() && divisible; ++i) {
                for (std::size_t j = k + 1; j < d.cols(); ++j) {
                    if (!d.at(k, k).divides(d.at(i, j))) {
                        row_add(k, i, Poly::one());
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) return true;
        }
    }

    SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m) { return SmithReducer(m).run(); }

std::size_t rank_fraction_free(PolyMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        const Poly p = m.at(rank, c);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const Poly e = m.at(i, c);
            if (e.is_zero()) continue;
            // row_i <- p * row_i + e * row_rank, then strip the row content.
            Poly content;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                m.at(i, j) = p * m.at(i, j) + e * m.at(rank, j);
                content = Poly::gcd(content, m.at(i, j));
            }
            if (!content.is_zero() && !content.is_one()) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (!m.at(i, j).is_zero()) m.at(i, j) = Poly::divmod(m.at(i, j), content).first;
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace knotlike
