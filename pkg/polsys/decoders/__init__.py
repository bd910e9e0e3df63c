from polsys.errors import UsageError
from polsys.decoders.outcome import DecodeOutcome, FailReason  # noqa
from polsys.decoders.bounds import e_max_collab, l_bk, l_glz, l_star, p_bms, p_glz, p_spr  # noqa
from polsys.decoders.keyeq import KeyEquationMatrix, build_key_matrix  # noqa
from polsys.decoders.glz import LocalKernelResult, decode, kernel_dim_one_witness, local_kernels  # noqa
from polsys.decoders.bk import BKKeyMatrix, bk_solve, build_bk_matrix  # noqa


DECODERS = {
    'glz': decode,
    'bk': bk_solve,
}


def get_decoder(name):
    try:
        return DECODERS[name]
    except KeyError:
        raise UsageError('unknown decoding method %r' % (name,), {'methods': sorted(DECODERS)})
