#pragma once

#include <array>
#include <complex>
#include <span>

namespace kshg {

using Complex = std::complex<double>;
using Vector3 = std::array<Complex, 3>;

// A unit vector in C^3, i.e. a qutrit pure state. Construction normalizes
// inputs whose norm is within 1e-6 of one and rejects everything else.
class Ray {
public:
    static constexpr double norm_tolerance = 1e-6;

    Ray(Complex a, Complex b, Complex c);
    explicit Ray(const Vector3& amplitudes);

    // Normalizes any nonzero vector, regardless of its length.
    static Ray normalized(const Vector3& v);
    static Ray basis(int index);

    const Vector3& amplitudes() const { return amp_; }
    Complex operator[](std::size_t i) const { return amp_[i]; }

    Ray with_phase(double angle) const;

private:
    struct Unchecked {};
    Ray(const Vector3& v, Unchecked) : amp_(v) {}

    Vector3 amp_;
};

// 3x3 Hermitian matrix. The stored entries are exactly Hermitian: the input
// is checked to 1e-12 and then symmetrized.
class Hermitian3 {
public:
    using Entries = std::array<std::array<Complex, 3>, 3>;
    static constexpr double hermiticity_tolerance = 1e-12;

    Hermitian3();
    explicit Hermitian3(const Entries& m);

    static Hermitian3 identity();
    static Hermitian3 diagonal(double a, double b, double c);

    const Complex& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
    const Entries& entries() const { return m_; }

    double trace() const;
    Vector3 apply(const Vector3& v) const;
    // Largest entrywise modulus of (this - other).
    double max_abs_diff(const Hermitian3& other) const;

    Hermitian3& operator+=(const Hermitian3& other);
    friend Hermitian3 operator+(Hermitian3 a, const Hermitian3& b) { return a += b; }
    friend Hermitian3 operator*(double s, Hermitian3 a);

private:
    Entries m_;
};

struct EigenDecomposition {
    std::array<double, 3> eigenvalues;  // ascending
    std::array<Ray, 3> eigenvectors;     // eigenvectors[k] belongs to eigenvalues[k]

    double min() const { return eigenvalues[0]; }
    double max() const { return eigenvalues[2]; }
};

Complex inner(const Vector3& a, const Vector3& b);
double norm(const Vector3& v);

// |<a|b>|, clamped to [0, 1].
double overlap(const Ray& a, const Ray& b);

Hermitian3 projector(const Ray& r);

// Throws ValidationError on an empty list.
Hermitian3 projector_sum(std::span<const Ray> rays);

// Cyclic complex Jacobi sweeps until the off-diagonal Frobenius norm drops
// below 1e-14 (relative to max(1, ||M||_F)).
EigenDecomposition eigensystem(const Hermitian3& m);

} // namespace kshg
