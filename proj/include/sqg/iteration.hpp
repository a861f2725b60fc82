#pragma once

#include "sqg/field.hpp"
#include "sqg/geometry.hpp"
#include "sqg/operators.hpp"
#include "sqg/params.hpp"
#include "sqg/stochastic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sqg {

// Level-q data the induction step reads: fields at an arbitrary time.
class LevelSampler {
public:
    virtual ~LevelSampler() = default;
    virtual VectorField2 y(double t) const = 0;
    virtual SymTensorField2 R(double t) const = 0;
    virtual ScalarField p(double t) const = 0;
    virtual double yFreqRadius() const = 0; // support bound 2 lambda_q
    virtual double rFreqRadius() const = 0; // support bound 4 lambda_q
};

// Base step (q = 0): the shear flow and its stress/pressure closed forms.
class BaseLevel : public LevelSampler {
public:
    BaseLevel(const Grid& grid, const ParameterSet& params, const NoiseProfile& profile,
              const ExponentialProcess* noise);

    VectorField2 y(double t) const override;
    SymTensorField2 R(double t) const override;
    ScalarField p(double t) const override; // est 444, needs Upsilon(t)
    double yFreqRadius() const override;
    double rFreqRadius() const override;

    const NoiseProfile& profile() const { return profile_; }
    double lambda0() const { return lambda0_; }

private:
    Grid grid_;
    ParameterSet params_;
    NoiseProfile profile_;
    const ExponentialProcess* noise_;
    double lambda0_;
    ScalarField sinx2_, cosx2_, sin2x2_; // unit spatial shapes
    SymTensorField2 bLambdaShear_;       // B(Lambda^{gamma1} (sin x2, 0)), time-independent shape
};

// Temporal cutoff partition chi_j on [t_{q+1}, T_L] (est 209/210).
struct CutoffSystem {
    double tau;
    long jmin, jmax;

    double chi(long j, double t) const;
    double chiDt(long j, double t) const;
    std::vector<long> activeWindows(double t) const;
    double partitionDefect(double t) const; // |sum chi_j^2 - 1|
};

CutoffSystem buildCutoffs(const SequenceValues& seq, double t_start, double T_L, double dt_path);

// Space-time mollified state of level q at one time (est 337/338).
struct MollifiedState {
    double t;
    VectorField2 y_l;
    SymTensorField2 R_l;
    ScalarField p_l;
    double upsilon_l, upsilon_l_dt;
    SymTensorField2 R_com1;
};

// Backward-characteristics flow map anchored at tau*j (est 354).
struct FlowMap {
    long j;
    double t, anchor;
    VectorField2 displacement; // Phi = x + displacement
    double gradDefect;         // sup |grad Phi - Id|
    double gradBoundLog;       // (t - anchor) * ||D u||, est 199a in logs
};

struct AmplitudePair {
    int pairIndex; // direction pair within the window's family
    ScalarField a; // a_{k,j}
    double supA;
};

// Everything attached to one active cutoff window at one evaluation time.
struct WindowData {
    long j;
    double chi, chiDt;
    const DirectionFamily* family;
    const GeometricCoefficients* coeffs;
    FlowMap flow;
    SymTensorField2 R_qj; // transported stress (est 355)
    std::vector<AmplitudePair> amplitudes;
};

struct StressBreakdown {
    SymTensorField2 R_T, N1, N2, L1, L2, R_O, R_com1, Com2_1, Com2_2, Com2_3;
    SymTensorField2 total;
    std::map<std::string, double> norms;  // sup norms per component
    std::map<std::string, double> ratios; // vs M0(t) lambda_{q+2}^{2-g2} delta_{q+2}
};

struct OscillationReport {
    double o1_tracefree_residual;
    double o1_reference; // ||sum chi^2 R_qj||_inf
    double approx_norm;
    double high_norm;
    double low_inferred_norm;
    bool cancellation_ok; // o1 residual <= 1e-8 * reference
};

struct FrameChecks {
    double w_imag_defect;
    double w_support_outside;      // max coeff outside [lambda/2, 2 lambda]
    double y1_support_outside;     // outside B(0, 2 lambda_{q+1})
    double r1_support_outside;     // outside B(0, 4 lambda_{q+1})
    double w_sup, w_bound_350a;    // est 350a margin
    double y_dist_sup, y_dist_bound_327;
    double residual_rel;           // Leray-projected est 190 self-consistency
    double pressure_crosscheck;    // ||grad p_rec - grad p_{q+1}|| / scale
    double mollified_eq_residual;  // est 341, Leray-projected
    double com2_sup_zero_noise;    // sup over Com2 parts (zero-noise runs)
};

// One induction step q -> q+1 on the toy grid.
class StepEvaluator {
public:
    StepEvaluator(const Grid& grid, const ParameterSet& params, const PaperConstants& constants,
                  const WienerPath& path);

    const ExponentialProcess& noise() const { return *noise_; }
    const NoiseProfile& profile() const { return profile_; }
    const CutoffSystem& cutoffs() const { return cutoffs_; }
    const BaseLevel& base() const { return *base_; }
    const SequenceValues& seq1() const { return seq1_; }
    double T_L() const { return noise_->T_L(); }

    MollifiedState mollify(double t) const;
    FlowMap solveFlowMap(long j, double t) const;
    WindowData buildWindow(long j, double t) const;
    // w_{q+1}(t) assembled over the active windows (est 347); windows returned too.
    VectorField2 perturbation(double t, std::vector<WindowData>& windows, double* imagDefect = nullptr) const;
    VectorField2 y1(double t) const; // y_l + w
    StressBreakdown assembleStresses(double t) const;
    OscillationReport decomposeOscillation(double t) const;
    FrameChecks frameChecks(double t, double dtCheck) const;

    // Admissible check times: gamma-ball margin and resolvable characteristics.
    std::vector<double> defaultCheckTimes() const;
    // centered-difference step for the residual checks: inside the clean
    // second-order regime (the floor from flow-map accuracy sits near 1e-9)
    double dtCheckDefault() const { return 2e-4 * seq0_.tau; }

    // flow velocity Upsilon_l Lambda^{2-gamma2} y_l as sparse modes (exact trig evaluation)
    struct SparseVelocity {
        SparseModes m1, m2;
        double evaluate1(double x1, double x2) const { return m1.evaluate(x1, x2).real(); }
        double evaluate2(double x1, double x2) const { return m2.evaluate(x1, x2).real(); }
        double gradSupBound() const;
    };
    SparseVelocity flowVelocity(double t) const;

private:
    friend struct DeepHarness;
    VectorField2 packet(const WindowData& win, int dirIndex, double lambda) const;
    // coefficients of bar-a_{k,j} e^{i lambda k.Phi_j} (the scalar part of a packet)
    ScalarField scalarPacket(const WindowData& win, int dirIndex, double lambda) const;
    ScalarField amplitudeField(const WindowData& win, int pairIndex, bool bar, double t) const;

    // Field mollification uses a fixed-weight kernel measure with nodes at
    // fixed offsets in (ell, 2 ell] behind the evaluation time, so time
    // differentiation commutes with the discrete mollifier exactly. Upsilon
    // keeps the path-grid convolution (its derivative comes from the kernel).
    struct MovingKernel {
        double ell = 0.0;
        std::vector<double> offsets;
        std::vector<double> weights; // sum to 1
    };
    MovingKernel kernel_;
    SymTensorField2 mollifiedR(double t) const;
    VectorField2 mollifiedY(double t) const;

    Grid grid_;
    ParameterSet params_;
    PaperConstants constants_;
    NoiseProfile profile_;
    SequenceValues seq0_, seq1_;
    std::unique_ptr<ExponentialProcess> noise_;
    std::unique_ptr<BaseLevel> base_;
    CutoffSystem cutoffs_;
    DirectionFamily fam1_, fam2_;
    GeometricCoefficients geo1_, geo2_;
    double flowStepFactor_ = 1.0 / 128.0;
};

struct DeepOscillationReport {
    double ro_rel_diff;       // FFT route vs double-sum route, R_O analog
    double high_rel_diff;     // same for the k+k' != 0 part
    double low_rel_diff;      // inferred low part
    bool ok;                  // all <= 1e-6
};

// Self-contained dual-route check of the oscillation bilinear machinery at
// reduced resolution (lambda = 10, N = 64).
DeepOscillationReport deepOscillationCheck(int n = 64, std::uint64_t seed = 11);

} // namespace sqg
