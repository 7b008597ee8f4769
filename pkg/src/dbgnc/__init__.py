"""Threshold Boneh-Goh-Nissim encryption on the curve y^2 = x^3 + 1."""

from .bgn import Ciphertext, PrivateKey, PublicKey, bgn_decrypt, bgn_encrypt, bgn_keygen, ct_add
from .dlog import LogQuery, bsgs, pollard_lambda
from .ec import (
    INF, CurveParams, OpCounter, generate_parameters, is_on_curve, point_add, point_neg,
    random_parameters, sample_point_of_order_n, scalar_mul,
)
from .primes import next_prime
from .threshold import LagrangeContext, combine, deal, lagrange_mu, share_decrypt

__version__ = "0.1.0"
