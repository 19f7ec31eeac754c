#include "gnse/forcing.hpp"

#include <limits>

namespace gnse {

ForceSchedule ForceSchedule::constant(SpectralField f) {
    ForceSchedule s;
    s.kind_ = Kind::constant;
    s.fields_.push_back(std::move(f));
    return s;
}

ForceSchedule ForceSchedule::sampled(std::vector<double> times, std::vector<SpectralField> fields) {
    if (times.size() != fields.size() || times.size() < 2)
        throw ArgumentError("ForceSchedule::sampled: need >= 2 matching samples");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw ArgumentError("ForceSchedule: times must increase");
    for (size_t i = 1; i < fields.size(); ++i)
        if (!fields[i].same_layout(fields[0]))
            throw ConfigError("ForceSchedule: samples must share layout");
    ForceSchedule s;
    s.kind_ = Kind::sampled;
    s.times_ = std::move(times);
    s.fields_ = std::move(fields);
    return s;
}

SpectralField ForceSchedule::at(double t) const {
    if (kind_ == Kind::zero) throw ArgumentError("ForceSchedule: zero schedule has no field");
    if (kind_ == Kind::constant) return fields_[0];
    if (t <= times_.front()) return fields_.front();
    if (t >= times_.back()) return fields_.back();
    size_t hi = 1;
    while (times_[hi] < t) ++hi;
    const double w = (t - times_[hi - 1]) / (times_[hi] - times_[hi - 1]);
    SpectralField out = fields_[hi - 1];
    out *= (1.0 - w);
    SpectralField right = fields_[hi];
    right *= w;
    out += right;
    return out;
}

const SpectralField& ForceSchedule::constant_field() const {
    if (kind_ != Kind::constant) throw ArgumentError("ForceSchedule: not constant");
    return fields_[0];
}

double ForceSchedule::horizon() const {
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::constant) return std::numeric_limits<double>::infinity();
    return times_.back();
}

const SpectralField& ForceSchedule::layout_field() const {
    if (kind_ == Kind::zero) throw ArgumentError("ForceSchedule: zero schedule has no layout");
    return fields_[0];
}

}  // namespace gnse
