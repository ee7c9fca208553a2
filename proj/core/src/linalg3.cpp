#include "kshg/linalg3.hpp"

#include "kshg/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kshg {

namespace {

using Matrix = Hermitian3::Entries;

Matrix multiply(const Matrix& a, const Matrix& b)
{
    Matrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Matrix adjoint(const Matrix& a)
{
    Matrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = std::conj(a[j][i]);
    return r;
}

Matrix identity_entries()
{
    Matrix r{};
    for (int i = 0; i < 3; ++i)
        r[i][i] = 1.0;
    return r;
}

double frobenius(const Matrix& a)
{
    double s = 0.0;
    for (const auto& row : a)
        for (const auto& x : row)
            s += std::norm(x);
    return std::sqrt(s);
}

double off_diagonal(const Matrix& a)
{
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                s += std::norm(a[i][j]);
    return std::sqrt(s);
}

} // namespace

Complex inner(const Vector3& a, const Vector3& b)
{
    Complex s = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const Vector3& v)
{
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

Ray::Ray(Complex a, Complex b, Complex c) : Ray(Vector3{a, b, c}) {}

Ray::Ray(const Vector3& amplitudes)
{
    const double n = norm(amplitudes);
    if (!std::isfinite(n) || std::abs(n - 1.0) > norm_tolerance)
        throw ValidationError("ray norm " + std::to_string(n) + " deviates from 1 by more than 1e-6");
    for (std::size_t i = 0; i < 3; ++i)
        amp_[i] = amplitudes[i] / n;
}

Ray Ray::normalized(const Vector3& v)
{
    const double n = norm(v);
    if (!std::isfinite(n) || n == 0.0)
        throw ValidationError("cannot normalize a zero or non-finite vector");
    return Ray({v[0] / n, v[1] / n, v[2] / n}, Unchecked{});
}

Ray Ray::basis(int index)
{
    if (index < 0 || index > 2)
        throw ValidationError("basis index must be 0, 1 or 2");
    Vector3 v{};
    v[index] = 1.0;
    return Ray(v, Unchecked{});
}

Ray Ray::with_phase(double angle) const
{
    const Complex phase = std::polar(1.0, angle);
    return Ray({amp_[0] * phase, amp_[1] * phase, amp_[2] * phase}, Unchecked{});
}

Hermitian3::Hermitian3() : m_{} {}

Hermitian3::Hermitian3(const Entries& m)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const Complex d = m[i][j] - std::conj(m[j][i]);
            if (!(std::abs(d) <= hermiticity_tolerance))
                throw ValidationError("matrix is not Hermitian: entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") differs from its conjugate transpose by " +
                                      std::to_string(std::abs(d)));
            const Complex avg = 0.5 * (m[i][j] + std::conj(m[j][i]));
            if (i == j) {
                m_[i][i] = avg.real();
            } else {
                m_[i][j] = avg;
                m_[j][i] = std::conj(avg);
            }
        }
}

Hermitian3 Hermitian3::identity()
{
    return diagonal(1.0, 1.0, 1.0);
}

Hermitian3 Hermitian3::diagonal(double a, double b, double c)
{
    Entries m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return Hermitian3(m);
}

double Hermitian3::trace() const
{
    return m_[0][0].real() + m_[1][1].real() + m_[2][2].real();
}

Vector3 Hermitian3::apply(const Vector3& v) const
{
    Vector3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i] += m_[i][j] * v[j];
    return r;
}

double Hermitian3::max_abs_diff(const Hermitian3& other) const
{
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(m_[i][j] - other.m_[i][j]));
    return worst;
}

Hermitian3& Hermitian3::operator+=(const Hermitian3& other)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m_[i][j] += other.m_[i][j];
    return *this;
}

Hermitian3 operator*(double s, Hermitian3 a)
{
    for (auto& row : a.m_)
        for (auto& x : row)
            x *= s;
    return a;
}

double overlap(const Ray& a, const Ray& b)
{
    return std::clamp(std::abs(inner(a.amplitudes(), b.amplitudes())), 0.0, 1.0);
}

Hermitian3 projector(const Ray& r)
{
    Hermitian3::Entries m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = r[i] * std::conj(r[j]);
    return Hermitian3(m);
}

Hermitian3 projector_sum(std::span<const Ray> rays)
{
    if (rays.empty())
        throw ValidationError("projector sum needs at least one ray; no vertices are bound to rays");
    Hermitian3 sum;
    for (const auto& r : rays)
        sum += projector(r);
    return sum;
}

EigenDecomposition eigensystem(const Hermitian3& h)
{
    constexpr double threshold = 1e-14;
    constexpr int max_sweeps = 64;

    Matrix m = h.entries();
    Matrix v = identity_entries();
    const double scale = std::max(1.0, frobenius(m));

    for (int sweep = 0; sweep < max_sweeps && off_diagonal(m) > threshold * scale; ++sweep) {
        for (int p = 0; p < 2; ++p)
            for (int q = p + 1; q < 3; ++q) {
                const double b = std::abs(m[p][q]);
                if (b == 0.0)
                    continue;

                // Rotate the (p,q) element onto the real axis, then apply a
                // real Jacobi rotation that annihilates it.
                const Complex phase = std::polar(1.0, -std::arg(m[p][q]));
                const double a = m[p][p].real();
                const double d = m[q][q].real();
                const double theta = (d - a) / (2.0 * b);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                Matrix j = identity_entries();
                j[p][p] = c;
                j[p][q] = s;
                j[q][p] = -s * phase;
                j[q][q] = c * phase;

                m = multiply(adjoint(j), multiply(m, j));
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for (int k = 0; k < 3; ++k)
                    m[k][k] = m[k][k].real();
                v = multiply(v, j);
            }
    }

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return m[x][x].real() < m[y][y].real(); });

    auto column = [&](int k) { return Ray::normalized({v[0][k], v[1][k], v[2][k]}); };
    return EigenDecomposition{
        {m[order[0]][order[0]].real(), m[order[1]][order[1]].real(), m[order[2]][order[2]].real()},
        {column(order[0]), column(order[1]), column(order[2])},
    };
}

} // namespace kshg
