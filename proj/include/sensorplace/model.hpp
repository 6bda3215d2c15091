#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sensorplace {

/// Per-sensor alarm statistics: detection probability P_D and false-alarm
/// probability P_F. Every sensor in a deployment shares one model.
struct SensorModel {
    double p_d = 0.0;
    double p_f = 0.0;

    /// Validating constructor; throws std::invalid_argument outside [0,1].
    static SensorModel make(double p_d, double p_f);

    friend bool operator==(const SensorModel&, const SensorModel&) = default;
};

/// Complemented model (1 - P_D, 1 - P_F). Error probability is invariant
/// under this map because the detector can flip every observation bit.
SensorModel flip_model(const SensorModel& model);

/// Number of sensors at each point, canonical (non-increasing) order with
/// zeros trimmed. Points past counts().size() up to n() hold no sensor.
class Placement {
public:
    Placement() = default;

    const std::vector<int>& counts() const { return counts_; }
    int m() const { return m_; }
    int n() const { return n_; }

    /// Number of points that carry at least one sensor.
    int occupied() const { return static_cast<int>(counts_.size()); }

    /// Sensors at 1-based point j; 0 for empty points.
    int at(int j) const;

    /// First sensor slot (0-based) of the contiguous block for point j.
    int offset(int j) const;

    /// Same placement considered over a different number of points.
    Placement with_points(int n) const;

    /// Dash-joined counts without trailing zeros, e.g. "2-1-1".
    std::string label() const;

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.counts_ == b.counts_;
    }
    friend bool operator<(const Placement& a, const Placement& b) {
        return a.counts_ < b.counts_;
    }

private:
    friend Placement canonicalize_placement(std::span<const int>, int);

    std::vector<int> counts_;
    std::vector<int> offsets_;
    int m_ = 0;
    int n_ = 0;
};

/// Sorts descending and trims zeros. Rejects negative entries, an all-zero
/// vector, and inputs that occupy more than n points.
Placement canonicalize_placement(std::span<const int> raw_counts, int n);
Placement canonicalize_placement(std::initializer_list<int> raw_counts, int n);

/// Parses "2-1-1-0" style text (trailing zeros optional).
Placement parse_placement(std::string_view text, int n);

/// Joint alarm vector. Sensor k (1-based) is stored at bit weight 2^(M-k),
/// so the index reads as the binary number y_1 y_2 ... y_M.
struct ObservationIndex {
    std::uint32_t bits = 0;

    /// Alarm bit of 1-based sensor k among m sensors.
    int alarm(int k, int m) const { return static_cast<int>((bits >> (m - k)) & 1u); }
    int alarm_total() const;

    /// Builds an index from y_1..y_M given in reading order.
    static ObservationIndex from_bits(std::span<const int> y);
    static ObservationIndex from_bits(std::initializer_list<int> y);

    friend bool operator==(const ObservationIndex&, const ObservationIndex&) = default;
};

/// Index with every alarm bit inverted.
ObservationIndex complement(ObservationIndex y, int m);

/// Alarms raised by the sensors sitting at 1-based point j.
int alarm_count_at_point(ObservationIndex y, const Placement& placement, int j);

/// p_j(y): probability of observing y when the intruder is at point j.
/// Uses 0^0 = 1 so deterministic sensors give exact 0/1 values.
double conditional_pmf(ObservationIndex y, int j, const Placement& placement,
                       const SensorModel& model);

/// Dense table of p_j(y). Points with no sensors share one stored row;
/// row index r < occupied() is point r+1, row occupied() is the empty row.
class PmfTable {
public:
    PmfTable(const Placement& placement, const SensorModel& model);

    const Placement& placement() const { return placement_; }
    const SensorModel& model() const { return model_; }
    std::size_t observations() const { return observations_; }

    int stored_rows() const { return rows_; }

    /// Number of hypotheses that share the empty row.
    int empty_multiplicity() const { return placement_.n() - placement_.occupied(); }

    std::span<const double> row_for_point(int j) const;
    double value(int j, ObservationIndex y) const;

    /// Sum over all n hypotheses of p_j(y).
    double total(ObservationIndex y) const;
    /// max_j p_j(y) over all n hypotheses.
    double maximum(ObservationIndex y) const;

private:
    std::span<const double> row(int r) const;

    Placement placement_;
    SensorModel model_;
    std::size_t observations_ = 0;
    int rows_ = 0;
    std::vector<double> values_;
};

}  // namespace sensorplace
