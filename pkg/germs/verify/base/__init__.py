from germs.verify.base.BasePlan import BasePlan, TrialOutcome, VerifyReport, trial_seed
