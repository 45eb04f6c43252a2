#include "rtm/series.hpp"

#include "rtm/errors.hpp"
#include "rtm/hopf.hpp"
#include "rtm/tree_maps.hpp"

namespace rtm {

PolySeries PolySeries::constant(int order, WordSum c) {
  PolySeries s(order);
  s[0] = std::move(c);
  return s;
}

PolySeries& PolySeries::operator+=(const PolySeries& o) {
  if (o.order() != order()) throw DimensionError("series orders differ");
  for (int k = 0; k <= order(); ++k) (*this)[k] += o[k];
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& o) {
  if (o.order() != order()) throw DimensionError("series orders differ");
  for (int k = 0; k <= order(); ++k) (*this)[k] -= o[k];
  return *this;
}

PolySeries& PolySeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  if (a.order() != b.order()) throw DimensionError("series orders differ");
  const int n = a.order();
  PolySeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += concat(a[i], b[j]);
    }
  }
  return out;
}

EndoSeries::EndoSeries(PolySeries image_x, PolySeries image_y)
    : image_x_(std::move(image_x)), image_y_(std::move(image_y)) {
  if (image_x_.order() != image_y_.order()) throw DimensionError("generator images have different orders");
}

EndoSeries EndoSeries::identity(int order) {
  return EndoSeries(PolySeries::constant(order, letter_sum(Letter::x)),
                    PolySeries::constant(order, letter_sum(Letter::y)));
}

bool EndoSeries::is_identity_at_zero() const {
  return image_x_[0] == letter_sum(Letter::x) && image_y_[0] == letter_sum(Letter::y);
}

EndoSeries delta_u(const Rational& scale, int order) {
  // x (1 + a y u)^{-1} = Σ_k (-a)^k x y^k u^k
  PolySeries ix(order);
  Word term(Letter::x);
  Rational c = 1;
  for (int k = 0; k <= order; ++k) {
    ix[k].add(term, c);
    term = term * Word(Letter::y);
    c *= -scale;
  }
  PolySeries iy = PolySeries::constant(order, WordSum{{Word(Letter::x), 1}, {Word(Letter::y), 1}}) - ix;
  return EndoSeries(std::move(ix), std::move(iy));
}

PolySeries endo_apply(const EndoSeries& e, const WordSum& p) {
  const int n = e.order();
  PolySeries out(n);
  for (const auto& [w, c] : p) {
    PolySeries image = PolySeries::constant(n, WordSum(Word()));
    for (int i = 0; i < w.weight(); ++i) image = image * e.image(w.at(i));
    out += image * c;
  }
  return out;
}

PolySeries endo_apply(const EndoSeries& e, const PolySeries& p) {
  const int n = e.order();
  if (p.order() != n) throw DimensionError("series orders differ");
  PolySeries out(n);
  for (int k = 0; k <= n; ++k) {
    if (p[k].is_zero()) continue;
    PolySeries image = endo_apply(e, p[k]);
    for (int j = 0; j + k <= n; ++j) out[j + k] += image[j];
  }
  return out;
}

EndoSeries endo_compose(const EndoSeries& first, const EndoSeries& second) {
  if (first.order() != second.order()) throw DimensionError("series orders differ");
  return EndoSeries(endo_apply(first, second.image_x()), endo_apply(first, second.image_y()));
}

EndoSeries endo_inverse(const EndoSeries& e) {
  if (!e.is_identity_at_zero()) throw DomainError("endomorphism is not the identity at u = 0");
  const int n = e.order();
  EndoSeries inv = EndoSeries::identity(n);
  PolySeries ix = inv.image_x();
  PolySeries iy = inv.image_y();
  // e(f_k) = f_k + O(u), so the u^k residual of e∘inv is cancelled by
  // subtracting it from the u^k coefficient of inv.
  for (int k = 1; k <= n; ++k) {
    ix[k] -= endo_apply(e, ix)[k];
    iy[k] -= endo_apply(e, iy)[k];
  }
  return EndoSeries(std::move(ix), std::move(iy));
}

PolySeries exp_derivation_series(const std::function<Rational(int)>& coeffs, const WordSum& target, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) c[static_cast<std::size_t>(m)] = coeffs(m);

  auto generator = [&](const PolySeries& s) {
    PolySeries out(order);
    for (int k = 0; k <= order; ++k) {
      if (s[k].is_zero()) continue;
      for (int m = 1; k + m <= order; ++m) {
        const Rational& cm = c[static_cast<std::size_t>(m)];
        if (sgn(cm) == 0) continue;
        out[k + m].add_scaled(partial_n(m, s[k]), cm);
      }
    }
    return out;
  };

  // The generator raises u-order, so A^k vanishes past k = order.
  PolySeries term = PolySeries::constant(order, target);
  PolySeries out = term;
  for (int k = 1; k <= order; ++k) {
    term = generator(term) * Rational(Integer(1), Integer(k));
    out += term;
  }
  return out;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  if (a.order() != b.order()) throw DimensionError("series orders differ");
  const int n = a.order();
  HSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

HSeries lambda_series(int order) {
  HSeries s(order);
  for (int k = 0; k <= order; ++k) s[k] = ForestSum(ladder(k));
  return s;
}

HSeries hseries_log(const HSeries& a) {
  if (!(a[0] == ForestSum(Forest()))) throw DomainError("log requires constant term I");
  const int n = a.order();
  HSeries b = a;
  b[0] = ForestSum();
  HSeries power = b;
  HSeries out(n);
  for (int d = 1; d <= n; ++d) {
    Rational c(Integer(d % 2 == 1 ? 1 : -1), Integer(d));
    for (int k = 0; k <= n; ++k) out[k].add_scaled(power[k], c);
    power = power * b;
  }
  return out;
}

namespace {

template <class Series, class Render>
std::string render_series(const Series& s, Render render) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += render(s[k]);
    } else {
      out += "(" + render(s[k]) + ")·u";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const PolySeries& s) {
  return render_series(s, [](const WordSum& c) { return to_string(c); });
}

std::string to_string(const HSeries& s) {
  return render_series(s, [](const ForestSum& c) { return to_string(c); });
}

}  // namespace rtm
