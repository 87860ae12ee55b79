from zreorder.services.presentation import PresentationService
from zreorder.services.orbit import OrbitService
from zreorder.services.reorder import OrderHandle, ReorderService
from zreorder.services.coloring import Coloring, ColoringService
from zreorder.services.conjugacy import ConjugacyService
from zreorder.services.oracle import OracleService, ReportBuilder

# Export all services
__all__ = [
    "PresentationService",
    "OrbitService",
    "OrderHandle",
    "ReorderService",
    "Coloring",
    "ColoringService",
    "ConjugacyService",
    "OracleService",
    "ReportBuilder",
]
