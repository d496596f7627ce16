#include "marc/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "marc/error.hpp"

namespace marc::io {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 60;
constexpr int kTicks = 5;

std::string fixed(double v, int precision = 2) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

std::string tick_label(double v) {
  if (std::abs(v) < 1e-300) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.5;
    return {lo - pad, hi + pad};
  }
  return {lo, hi};
}

class Frame {
 public:
  Frame(Range x, Range y) : x_(x), y_(y) {}

  double px(double x) const { return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom); }

  std::string axes(const PlotLabels& labels) const {
    std::string s;
    s += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" +
         fixed(kWidth - kLeft - kRight) + "\" height=\"" + fixed(kHeight - kTop - kBottom) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= kTicks; ++k) {
      const double xv = x_.lo + (x_.hi - x_.lo) * k / kTicks;
      const double yv = y_.lo + (y_.hi - y_.lo) * k / kTicks;
      s += "<text x=\"" + fixed(px(xv)) + "\" y=\"" + fixed(kHeight - kBottom + 18) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + tick_label(xv) + "</text>\n";
      s += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(py(yv) + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + tick_label(yv) + "</text>\n";
    }
    s += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"" + fixed(kTop - 14) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape(labels.title) + "</text>\n";
    s += "<text x=\"" + fixed((kLeft + kWidth - kRight) / 2) + "\" y=\"" + fixed(kHeight - 16) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + escape(labels.x_label) + "</text>\n";
    s += "<text x=\"18\" y=\"" + fixed((kTop + kHeight - kBottom) / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 " +
         fixed((kTop + kHeight - kBottom) / 2) + ")\">" + escape(labels.y_label) + "</text>\n";
    return s;
  }

 private:
  Range x_;
  Range y_;
};

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n"
         "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
}

}  // namespace

std::string line_plot(const PlotLabels& labels, const std::vector<LineSeries>& series) {
  double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw Error(ErrorKind::DimensionMismatch, "series x/y lengths differ");
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
      xlo = std::min(xlo, s.x[k]);
      xhi = std::max(xhi, s.x[k]);
      ylo = std::min(ylo, s.y[k]);
      yhi = std::max(yhi, s.y[k]);
    }
  }
  if (!(xlo <= xhi)) throw Error(ErrorKind::InvalidParameter, "nothing to plot");
  const Frame frame(padded(xlo, xhi), padded(std::min(ylo, 0.0), yhi));

  static constexpr const char* kColors[] = {"#1f4e9c", "#b22222", "#2e8b57", "#555555"};
  std::string out = header() + frame.axes(labels);
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += "<polyline fill=\"none\" stroke=\"";
    out += kColors[i % 4];
    out += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series[i].x.size(); ++k) {
      if (k > 0) out += ' ';
      out += fixed(frame.px(series[i].x[k])) + "," + fixed(frame.py(series[i].y[k]));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string raster_plot(const PlotLabels& labels, const std::vector<double>& x, const std::vector<double>& y,
                        const Eigen::MatrixXd& values) {
  if (values.rows() != static_cast<Eigen::Index>(y.size()) || values.cols() != static_cast<Eigen::Index>(x.size()) ||
      x.empty() || y.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "raster grid does not match the value matrix");
  }
  // Cell edges sit halfway between neighbouring grid points.
  auto edges = [](const std::vector<double>& g) {
    std::vector<double> e(g.size() + 1);
    const double half = g.size() > 1 ? (g[1] - g[0]) / 2 : 0.5;
    const double half_end = g.size() > 1 ? (g[g.size() - 1] - g[g.size() - 2]) / 2 : 0.5;
    e.front() = g.front() - half;
    e.back() = g.back() + half_end;
    for (std::size_t k = 1; k < g.size(); ++k) e[k] = (g[k - 1] + g[k]) / 2;
    return e;
  };
  const auto xe = edges(x);
  const auto ye = edges(y);
  const Frame frame({xe.front(), xe.back()}, {ye.front(), ye.back()});
  const double peak = values.size() > 0 ? values.maxCoeff() : 0.0;

  std::string out = header();
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    const double top = frame.py(ye[static_cast<std::size_t>(i) + 1]);
    const double bottom = frame.py(ye[static_cast<std::size_t>(i)]);
    for (Eigen::Index k = 0; k < values.cols(); ++k) {
      const double left = frame.px(xe[static_cast<std::size_t>(k)]);
      const double right = frame.px(xe[static_cast<std::size_t>(k) + 1]);
      const double level = peak > 0 ? std::clamp(values(i, k) / peak, 0.0, 1.0) : 0.0;
      const int gray = static_cast<int>(std::lround(255.0 * (1.0 - level)));
      out += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(top) + "\" width=\"" + fixed(right - left) +
             "\" height=\"" + fixed(bottom - top) + "\" fill=\"rgb(" + std::to_string(gray) + "," +
             std::to_string(gray) + "," + std::to_string(gray) + ")\"/>\n";
    }
  }
  out += frame.axes(labels);
  out += "</svg>\n";
  return out;
}

}  // namespace marc::io
