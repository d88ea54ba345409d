#include "betajacobi/series.hpp"

namespace betajacobi {

const char* series_parameter_name(SeriesParameter p) {
  switch (p) {
    case SeriesParameter::inv_beta:
      return "inv_beta";
    case SeriesParameter::inv_b:
      return "inv_b";
    case SeriesParameter::shift:
      return "shift";
    case SeriesParameter::xi_s:
      return "xi_s";
  }
  return "?";
}

}  // namespace betajacobi
