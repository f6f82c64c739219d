from .sequence import Alphabet, Sequence
from .profile import BoundedReport, DistanceProfile, MarkVector
from .counting import KnapsackPlan, PositionTable, WorkCounters
from .index import MatchStat, SuffixIndex
from .randomized import EstimateProfile, MismatchLedger, OneMismatchVerdict
from .bench import BenchCell, BenchRecord
from .run import BenchConfig, RunConfig
