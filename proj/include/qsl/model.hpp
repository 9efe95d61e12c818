#pragma once

#include <string>
#include <vector>

#include "qsl/matrix.hpp"

namespace qsl {

/// Numerical tolerances carried by a Scenario. All strictly positive.
struct Tolerances {
    double herm_tol = 1e-10;    // allowed deviation from M = M^dag
    double p_floor = 1e-12;     // eigenvalue clamp for ln(rho)
    double omega_tol = 1e-8;    // Bohr-frequency clustering (relative to max(1, ||H||_max))
    double pop_gap_tol = 1e-10; // population gap below which 1/(p_n - p_m) is regularized
    double gap_tol = 1e-8;      // minimum energy gap for the counter-diabatic construction
    double psd_tol = 1e-8;      // allowed negative eigenvalue excursion of rho
};

enum class ProtocolKind { Constant, LinearInterp, LandauZener, TwoLevelDrive };

/// Time-dependent system Hamiltonian H(t).
///
/// Kinds:
///   constant        H(t) = H0
///   linear_interp   entrywise linear interpolation between sample matrices,
///                   defined on [times.front(), times.back()]
///   landau_zener    H(t) = (delta/2) sx + (v t/2) sz
///   two_level_drive H(t) = (epsilon/2) sz + (amp/2) cos(omega t + phase) sx
class HamiltonianProtocol {
public:
    static HamiltonianProtocol constant(ComplexMatrix h0);
    static HamiltonianProtocol linear_interp(std::vector<double> times,
                                             std::vector<ComplexMatrix> samples);
    static HamiltonianProtocol landau_zener(double delta, double v);
    static HamiltonianProtocol two_level_drive(double epsilon, double amp, double omega,
                                               double phase = 0.0);

    ComplexMatrix at(double t) const;
    /// dH/dt. Analytic for every kind when analytic_derivative is set
    /// (the default); otherwise a central difference with step h.
    ComplexMatrix derivative(double t, double h) const;

    ProtocolKind kind() const { return kind_; }
    int dim() const { return dim_; }

    bool analytic_derivative = true;

private:
    HamiltonianProtocol() = default;

    ProtocolKind kind_ = ProtocolKind::Constant;
    int dim_ = 0;
    std::vector<double> times_;
    std::vector<ComplexMatrix> samples_;
    double delta_ = 0, v_ = 0;
    double epsilon_ = 0, amp_ = 0, omega_ = 0, phase_ = 0;
};

/// Bath coupling spectrum gamma(omega). Negative frequencies are always
/// evaluated as gamma(-|w|) = gamma(|w|) exp(-beta |w|), so the detailed
/// balance condition holds by construction, not by user input.
struct RateModel {
    enum class Kind { Flat, Ohmic };

    Kind kind = Kind::Flat;
    double gamma0 = 1.0;
    double beta = 1.0;

    double rate(double omega) const;
};

struct Coupling {
    ComplexMatrix op;
    RateModel rate;
};

struct GridSpec {
    double t0 = 0, t1 = 1, dt = 1e-2;

    /// Number of steps; grid times are t0 + k*dt for k = 0..steps.
    int steps() const;
};

struct InitialStateSpec {
    enum class Kind { Gibbs, Pure, Matrix };
    Kind kind = Kind::Gibbs;
    ComplexVector vec; // Pure
    ComplexMatrix mat; // Matrix
};

/// Full problem statement for one simulation run.
struct Scenario {
    int dim = 2;
    double hbar = 1.0;
    double beta = 1.0;
    double lambda = 1.0; // dissipation scale multiplying the dissipator
    HamiltonianProtocol protocol = HamiltonianProtocol::landau_zener(1.0, 1.0);
    std::vector<Coupling> couplings;
    InitialStateSpec initial;
    GridSpec grid;
    Tolerances tol;
    std::string name;

    ComplexMatrix hamiltonian_at(double t) const;
    ComplexMatrix hamiltonian_derivative(double t) const; // step = dt/10 when not analytic
    double fd_step() const { return grid.dt / 10.0; }
    /// Largest gamma0 among couplings (0 when there are none); sets the
    /// scale of rate-based tolerances.
    double gamma_scale() const;

    void validate() const; // throws ValidationError
};

/// One frequency-resolved jump channel L_{omega,alpha} with its rate.
struct JumpChannel {
    double omega = 0; // Bohr frequency (energy units)
    int alpha = 0;    // index of the originating coupling
    ComplexMatrix op;
    double gamma = 0;
};

/// The {omega, alpha -> L, gamma} family at one time slice, together with
/// the eigensystem of H(t) it was built from. channels[reverse[i]] is the
/// (-omega, alpha) partner of channels[i] (itself for omega = 0).
struct JumpOperatorSet {
    double t = 0;
    ComplexMatrix hamiltonian;
    EigenSystem eigen;
    std::vector<JumpChannel> channels;
    std::vector<int> reverse;

    /// Same channels with every rate multiplied by lambda.
    JumpOperatorSet scaled(double lambda) const;
    double max_gamma() const;
};

/// Spectrally decompose the couplings into Bohr-frequency jump operators.
/// Frequencies within omega_tol * max(1, ||H||_max) of each other are merged
/// into one channel; operators with max-abs below 1e-14 are dropped.
JumpOperatorSet build_jump_operators(const ComplexMatrix& h,
                                     const std::vector<Coupling>& couplings,
                                     double omega_tol, double herm_tol = 1e-10,
                                     double t = 0.0);

JumpOperatorSet build_jump_operators(const Scenario& sc, double t);

/// exp(-beta H)/Z.
ComplexMatrix gibbs_state(const ComplexMatrix& h, double beta, double herm_tol = 1e-10);

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

} // namespace qsl
