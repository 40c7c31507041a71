from .forms import FormsClient
from .frobenius import FrobeniusClient
from .lehmer import LehmerClient
from .service_client import ServiceClient
from .table import TableClient
from .verify import VerifyClient

__all__ = [
    "FormsClient",
    "FrobeniusClient",
    "LehmerClient",
    "ServiceClient",
    "TableClient",
    "VerifyClient",
]
