from .quantile import QuantileFn
from .measure import (MeasureSpec, BuiltinMeasure, DiscreteMeasure,
                      TabulatedMeasure, center, quantile, moment,
                      check_measure, sample, measure_from_dict,
                      measure_from_file, ks_distance, MEASURE_KINDS)


__all__ = ["QuantileFn", "MeasureSpec", "BuiltinMeasure", "DiscreteMeasure",
           "TabulatedMeasure", "center", "quantile", "moment", "check_measure",
           "sample", "measure_from_dict", "measure_from_file", "ks_distance",
           "MEASURE_KINDS"]
