#include "cmvar/varieties.hpp"

#include "cmvar/trace_poly.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <stdexcept>

namespace cmvar {

using nlohmann::ordered_json;

bool VarietyPoint::valid() const {
    if (X.rows() != n || X.cols() != n || Y.rows() != n || Y.cols() != n) return false;
    if (variety == Variety::COM) return commutator(X, Y).is_zero();
    Matrix m = commutator(X, Y) + Matrix::identity(n);
    if (rank(m) != 1) return false;
    return witness.has_value() && witness->consistent();
}

VarietyPoint cm_point(int n, const std::vector<Rational>& x, const std::vector<Rational>& p) {
    if (static_cast<int>(x.size()) != n || static_cast<int>(p.size()) != n)
        throw std::invalid_argument("cm_point: expected n coordinates and n momenta");
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw std::invalid_argument("cm_point: repeated x entries");

    Matrix X = Matrix::diagonal(x);
    Matrix Y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            Y.at(i, j) = (i == j) ? p[i] : (x[i] - x[j]).inverse();

    CMQuadruple q;
    q.n = n;
    q.X = X;
    q.Y = Y;
    q.v = Matrix::ones(n, 1);
    q.w = Matrix::ones(1, n);

    VarietyPoint pt{Variety::CM, n, std::move(X), std::move(Y), std::move(q)};
    if (!pt.valid()) throw std::logic_error("cm_point: construction failed validation");
    return pt;
}

VarietyPoint com_point(const std::vector<Rational>& lambda, const std::vector<Rational>& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("com_point: length mismatch");
    VarietyPoint pt{Variety::COM, static_cast<int>(lambda.size()), Matrix::diagonal(lambda),
                    Matrix::diagonal(mu), std::nullopt};
    return pt;
}

GeneratorPoint generators_at(const VarietyPoint& pt) {
    if (!pt.valid()) throw std::invalid_argument("generators_at: invalid point");
    int n = pt.n;
    Matrix A = traceless(pt.X), B = traceless(pt.Y);
    GeneratorPoint g;
    g.n = n;
    g.values.push_back(pt.X.trace());
    g.values.push_back(pt.Y.trace());
    for (int i = 3; i <= generator_count(n); ++i)
        g.values.push_back(eval_trace(generator_word(i, n), A, B));
    return g;
}

RingPtr lambda_mu_ring(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("l" + std::to_string(i));
    for (int i = 1; i <= n; ++i) vars.push_back("m" + std::to_string(i));
    return make_ring(std::move(vars), std::vector<long>(2 * n, 1));
}

std::vector<Polynomial> symbolic_com_generators(int n, const RingPtr& ring) {
    if (n < 2) throw std::invalid_argument("symbolic_com_generators: n must be at least 2");
    // Centered coordinates: l_k - mean(l), m_k - mean(m).
    std::vector<Polynomial> centered_l, centered_m;
    Polynomial suml(ring), summ(ring);
    for (int k = 0; k < n; ++k) {
        suml += Polynomial::variable(ring, k);
        summ += Polynomial::variable(ring, n + k);
    }
    for (int k = 0; k < n; ++k) {
        centered_l.push_back(Polynomial::variable(ring, k) - suml * Rational(1, n));
        centered_m.push_back(Polynomial::variable(ring, n + k) - summ * Rational(1, n));
    }

    std::vector<Polynomial> gens;
    gens.push_back(suml);
    gens.push_back(summ);
    for (int i = 3; i <= generator_count(n); ++i) {
        CyclicWord w = generator_word(i, n);
        int p = w.count('x'), q = w.count('y');
        Polynomial sum(ring);
        for (int k = 0; k < n; ++k) {
            Polynomial t(ring, Rational(1));
            for (int e = 0; e < p; ++e) t = t * centered_l[k];
            for (int e = 0; e < q; ++e) t = t * centered_m[k];
            sum += t;
        }
        gens.push_back(std::move(sum));
    }
    return gens;
}

VarietyPoint random_cm_point(int n, Rng& rng) {
    std::vector<Rational> x, p;
    std::set<long> seen;
    while (static_cast<int>(x.size()) < n) {
        long v = rng.uniform(-24, 24);
        if (seen.insert(v).second) x.push_back(Rational(v));
    }
    for (int i = 0; i < n; ++i) p.push_back(Rational(rng.uniform(-12, 12)));
    return cm_point(n, x, p);
}

VarietyPoint random_com_point(int n, Rng& rng) {
    std::vector<Rational> l, m;
    for (int i = 0; i < n; ++i) l.push_back(Rational(rng.uniform(-12, 12)));
    for (int i = 0; i < n; ++i) m.push_back(Rational(rng.uniform(-12, 12)));
    return com_point(l, m);
}

std::pair<Matrix, Matrix> random_offvariety_point(uint64_t seed) {
    Rng rng(seed);
    const int n = 4;
    while (true) {
        Matrix X(n, n), Y(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                X.at(r, c) = Rational(rng.uniform(-5, 5));
                Y.at(r, c) = Rational(rng.uniform(-5, 5));
            }
        Matrix comm = commutator(X, Y);
        if (comm.is_zero()) continue;
        if (rank(comm + Matrix::identity(n)) == 1) continue;
        return {std::move(X), std::move(Y)};
    }
}

bool verify_identity_at(const WordSum& lhs, const WordSum& rhs, const VarietyPoint& pt) {
    if (!pt.valid()) throw std::invalid_argument("verify_identity_at: invalid point");
    Matrix A = traceless(pt.X), B = traceless(pt.Y);
    return eval_wordsum(lhs - rhs, A, B).is_zero();
}

namespace {

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const ordered_json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Rational::parse(j.at(r).at(c).get<std::string>());
    return m;
}

} // namespace

std::string point_to_json(const VarietyPoint& pt) {
    ordered_json j;
    j["variety"] = pt.variety == Variety::CM ? "CM" : "COM";
    j["n"] = pt.n;
    j["X"] = matrix_to_json(pt.X);
    j["Y"] = matrix_to_json(pt.Y);
    if (pt.witness) {
        ordered_json v = ordered_json::array(), w = ordered_json::array();
        for (int i = 0; i < pt.n; ++i) {
            v.push_back(pt.witness->v.at(i, 0).str());
            w.push_back(pt.witness->w.at(0, i).str());
        }
        j["v"] = std::move(v);
        j["w"] = std::move(w);
    }
    return j.dump();
}

VarietyPoint point_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    VarietyPoint pt;
    std::string variety = j.at("variety").get<std::string>();
    if (variety == "CM")
        pt.variety = Variety::CM;
    else if (variety == "COM")
        pt.variety = Variety::COM;
    else
        throw std::invalid_argument("point_from_json: unknown variety '" + variety + "'");
    pt.n = j.at("n").get<int>();
    pt.X = matrix_from_json(j.at("X"));
    pt.Y = matrix_from_json(j.at("Y"));
    if (j.contains("v") && j.contains("w")) {
        CMQuadruple q;
        q.n = pt.n;
        q.X = pt.X;
        q.Y = pt.Y;
        q.v = Matrix(pt.n, 1);
        q.w = Matrix(1, pt.n);
        for (int i = 0; i < pt.n; ++i) {
            q.v.at(i, 0) = Rational::parse(j.at("v").at(i).get<std::string>());
            q.w.at(0, i) = Rational::parse(j.at("w").at(i).get<std::string>());
        }
        pt.witness = std::move(q);
    }
    return pt;
}

} // namespace cmvar
