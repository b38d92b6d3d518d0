"""Services package."""
from subcount.services.invariants_service import invariants_service, InvariantsService
from subcount.services.recurrence_service import recurrence_service, RecurrenceService
from subcount.services.closed_forms_service import closed_forms_service, ClosedFormsService
from subcount.services.degeneration_service import degeneration_service, DegenerationService
from subcount.services.counting_service import counting_service, CountingService

__all__ = [
    "invariants_service",
    "InvariantsService",
    "recurrence_service",
    "RecurrenceService",
    "closed_forms_service",
    "ClosedFormsService",
    "degeneration_service",
    "DegenerationService",
    "counting_service",
    "CountingService",
]
