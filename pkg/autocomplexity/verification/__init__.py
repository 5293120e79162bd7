from .tracking import CheckRecord, CheckTracker, Tracker
