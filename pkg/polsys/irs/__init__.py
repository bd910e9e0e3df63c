from polsys.irs.codec import (  # noqa
    IRSParams,
    ReferenceBounds,
    SPRInstance,
    SPRTrialResult,
    irs_encode,
    random_messages,
    random_spr_instance,
    reference_bounds,
    spr_decode,
    spr_trial_rate,
)
