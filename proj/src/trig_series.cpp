#include "cw/trig_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cw {

void TrigSeries::add(int freq, double sinCoef, double cosCoef) {
  if (freq < 0) throw std::invalid_argument("TrigSeries: negative frequency");
  if (freq == 0) {
    constant_ += cosCoef;
    return;
  }
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), freq,
      [](const SeriesTerm& t, int f) { return t.freq < f; });
  if (it != terms_.end() && it->freq == freq) {
    it->sinCoef += sinCoef;
    it->cosCoef += cosCoef;
  } else {
    terms_.insert(it, SeriesTerm{freq, sinCoef, cosCoef});
  }
}

double TrigSeries::eval(double u, int order) const {
  double acc = (order == 0) ? constant_ : 0.0;
  for (const SeriesTerm& t : terms_) {
    const double f = static_cast<double>(t.freq);
    const double s = std::sin(f * u);
    const double c = std::cos(f * u);
    switch (order) {
      case 0:
        acc += t.sinCoef * s + t.cosCoef * c;
        break;
      case 1:
        acc += f * (t.sinCoef * c - t.cosCoef * s);
        break;
      case 2:
        acc += f * f * (-t.sinCoef * s - t.cosCoef * c);
        break;
      default:
        throw std::invalid_argument("TrigSeries: derivative order must be 0, 1 or 2");
    }
  }
  return acc;
}

long double TrigSeries::eval_ext(double u, int order) const {
  long double acc = (order == 0) ? static_cast<long double>(constant_) : 0.0L;
  for (const SeriesTerm& t : terms_) {
    const long double f = static_cast<long double>(t.freq);
    const long double fu = f * static_cast<long double>(u);
    const long double s = sinl(fu);
    const long double c = cosl(fu);
    switch (order) {
      case 0:
        acc += t.sinCoef * s + t.cosCoef * c;
        break;
      case 1:
        acc += f * (t.sinCoef * c - t.cosCoef * s);
        break;
      case 2:
        acc += f * f * (-t.sinCoef * s - t.cosCoef * c);
        break;
      default:
        throw std::invalid_argument("TrigSeries: derivative order must be 0, 1 or 2");
    }
  }
  return acc;
}

TrigSeries TrigSeries::derivative() const {
  TrigSeries d;
  for (const SeriesTerm& t : terms_) {
    const double f = static_cast<double>(t.freq);
    d.add(t.freq, -f * t.cosCoef, f * t.sinCoef);
  }
  return d;
}

bool TrigSeries::isConstant() const {
  for (const SeriesTerm& t : terms_) {
    if (t.sinCoef != 0.0 || t.cosCoef != 0.0) return false;
  }
  return true;
}

double TrigSeries::coefL1() const {
  double s = 0.0;
  for (const SeriesTerm& t : terms_) s += std::abs(t.sinCoef) + std::abs(t.cosCoef);
  return s;
}

double TrigSeries::derivCoefL1() const {
  double s = 0.0;
  for (const SeriesTerm& t : terms_) {
    s += t.freq * (std::abs(t.sinCoef) + std::abs(t.cosCoef));
  }
  return s;
}

void TrigSeries::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const SeriesTerm& t) {
                                return t.sinCoef == 0.0 && t.cosCoef == 0.0;
                              }),
               terms_.end());
}

TrigSeries2 TrigSeries2::rotated(double angle) const {
  const double c = std::cos(angle), s = std::sin(angle);
  TrigSeries2 out;
  out.x.add(0, 0.0, c * x.constant() - s * y.constant());
  out.y.add(0, 0.0, s * x.constant() + c * y.constant());
  for (const SeriesTerm& t : x.terms()) {
    out.x.add(t.freq, c * t.sinCoef, c * t.cosCoef);
    out.y.add(t.freq, s * t.sinCoef, s * t.cosCoef);
  }
  for (const SeriesTerm& t : y.terms()) {
    out.x.add(t.freq, -s * t.sinCoef, -s * t.cosCoef);
    out.y.add(t.freq, c * t.sinCoef, c * t.cosCoef);
  }
  return out;
}

TrigSeries2 TrigSeries2::translated(const Vec2& v) const {
  TrigSeries2 out = *this;
  out.x.add(0, 0.0, v.x);
  out.y.add(0, 0.0, v.y);
  return out;
}

kernels::PackedSeries pack_series(const TrigSeries2& s) {
  kernels::PackedSeries p;
  p.maxFreq = std::max(s.x.maxFreq(), s.y.maxFreq());
  const std::size_t slots = static_cast<std::size_t>(p.maxFreq) + 1;
  p.sx.assign(slots, 0.0);
  p.cx.assign(slots, 0.0);
  p.sy.assign(slots, 0.0);
  p.cy.assign(slots, 0.0);
  p.active.assign(slots, 0);
  p.cx[0] = s.x.constant();
  p.cy[0] = s.y.constant();
  for (const SeriesTerm& t : s.x.terms()) {
    const std::size_t f = static_cast<std::size_t>(t.freq);
    p.sx[f] = t.sinCoef;
    p.cx[f] = t.cosCoef;
  }
  for (const SeriesTerm& t : s.y.terms()) {
    const std::size_t f = static_cast<std::size_t>(t.freq);
    p.sy[f] = t.sinCoef;
    p.cy[f] = t.cosCoef;
  }
  for (std::size_t f = 1; f < slots; ++f) {
    p.active[f] =
        (p.sx[f] != 0.0 || p.cx[f] != 0.0 || p.sy[f] != 0.0 || p.cy[f] != 0.0) ? 1 : 0;
  }
  return p;
}

}  // namespace cw
