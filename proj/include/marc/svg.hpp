#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace marc::io {

struct PlotLabels {
  std::string title;
  std::string x_label;
  std::string y_label;
};

struct LineSeries {
  std::vector<double> x;
  std::vector<double> y;
};

/// Fixed 640x420 canvas, linear axes fitted to the data, one polyline per
/// series. Output depends only on the inputs.
std::string line_plot(const PlotLabels& labels, const std::vector<LineSeries>& series);

/// Grayscale raster: column k spans x[k], row i spans y[i]; black is the
/// largest value in the matrix, white is zero.
std::string raster_plot(const PlotLabels& labels, const std::vector<double>& x, const std::vector<double>& y,
                        const Eigen::MatrixXd& values);

}  // namespace marc::io
