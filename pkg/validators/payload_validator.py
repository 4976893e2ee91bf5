"""
Payload validator - Validates JSON request bodies

Ensures the structured matrix documents and options sent to the API
are well-formed before any parsing happens.
"""

from exceptions import ValidationError
from .base_validator import BaseValidator
from .matrix_validator import MatrixValidator


class PayloadValidator(BaseValidator):
    """Validates request payloads"""

    # Constants for validation
    MAX_DIMENSION = 64

    @classmethod
    def validate_matrix_payload(cls, data: dict, field: str = 'matrix') -> None:
        """
        Validate a payload carrying one structured matrix

        Args:
            data: Request body
            field: Key holding the matrix document
        """
        cls.validate_required_field(data, field)
        document = data[field]

        if not isinstance(document, dict) or 'rows' not in document:
            raise ValidationError(
                f"{field} must be an object with a 'rows' array",
                field=field
            )

        cls.validate_list_type(document['rows'], f'{field}.rows', list)
        rows = document['rows']
        if not rows or not rows[0]:
            raise ValidationError(f"{field} must have at least one row and column", field=field)

        cls.validate_integer_range(len(rows), f'{field} rows', max_value=cls.MAX_DIMENSION)
        cls.validate_integer_range(len(rows[0]), f'{field} columns', max_value=cls.MAX_DIMENSION)

        if 'method' in data:
            MatrixValidator.validate_method(data['method'])

    @classmethod
    def validate_vectors_payload(cls, data: dict) -> None:
        """Validate a payload carrying a list of vectors"""
        cls.validate_required_field(data, 'vectors')
        cls.validate_list_type(data['vectors'], 'vectors', list)
        if not data['vectors']:
            raise ValidationError("vectors must not be empty", field="vectors")

    @classmethod
    def validate_point(cls, point) -> None:
        """Validate an optional evaluation point"""
        cls.validate_list_type(point, 'point')
