from .periodic import (PeriodicFunction, hilbert_spectral, hilbert_pv,
                       lp_norm, norm_ratio_witness, random_trig_polynomial)


__all__ = ["PeriodicFunction", "hilbert_spectral", "hilbert_pv", "lp_norm",
           "norm_ratio_witness", "random_trig_polynomial"]
