from rest_framework import serializers

from .exceptions import QuantumError
from .qstate import DensityOperator, Ensemble, PureState
from .entropy import DISTRIBUTION_TOLERANCE


class ComplexPairField(serializers.ListField):
    """A complex number written as [re, im]"""
    child = serializers.FloatField()

    def __init__(self, **kwargs):
        kwargs.setdefault('min_length', 2)
        kwargs.setdefault('max_length', 2)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        re, im = super().to_internal_value(data)
        return complex(re, im)


class EnsembleItemSerializer(serializers.Serializer):
    p = serializers.FloatField(min_value=0)
    vector = serializers.ListField(child=ComplexPairField(), required=False, min_length=1)
    matrix = serializers.ListField(
        child=serializers.ListField(child=ComplexPairField(), min_length=1),
        required=False,
        min_length=1,
    )

    def validate(self, data):
        if ('vector' in data) == ('matrix' in data):
            raise serializers.ValidationError("Each member needs exactly one of 'vector' or 'matrix'")
        return data


class EnsembleSerializer(serializers.Serializer):
    """Validates the ensemble JSON format and builds an Ensemble"""
    dims = serializers.ListField(child=serializers.IntegerField(min_value=1), min_length=1)
    items = EnsembleItemSerializer(many=True)

    def validate_items(self, items):
        if not items:
            raise serializers.ValidationError("Ensemble needs at least one member")
        total = sum(item['p'] for item in items)
        if abs(total - 1) > DISTRIBUTION_TOLERANCE:
            raise serializers.ValidationError(f"probabilities sum to {total:.12g}")
        return items

    def validate(self, data):
        dims = tuple(data['dims'])
        members = []
        try:
            for item in data['items']:
                if 'vector' in item:
                    state = PureState(item['vector'], dims)
                else:
                    state = DensityOperator(item['matrix'], dims)
                members.append((item['p'], state))
            data['ensemble'] = Ensemble(tuple(members))
        except QuantumError as exc:
            raise serializers.ValidationError(str(exc))
        return data

    def create(self, validated_data):
        return validated_data['ensemble']


class EntropyRequestSerializer(EnsembleSerializer):
    pass


class HolevoRequestSerializer(EnsembleSerializer):
    basis = serializers.ChoiceField(choices=['computational'], default='computational')


class ErasureRequestSerializer(EnsembleSerializer):
    temperature = serializers.FloatField(default=1.0)
    match = serializers.BooleanField(default=False)
    support = serializers.BooleanField(default=False)

    def validate_temperature(self, value):
        if value <= 0:
            raise serializers.ValidationError("Temperature must be positive")
        return value


class LedgerSerializer(serializers.Serializer):
    w_extracted = serializers.FloatField()
    w_erasure = serializers.FloatField()
    q_total = serializers.FloatField()
    delta_S_system = serializers.FloatField()
    delta_S_bath = serializers.FloatField()
    delta_S_total = serializers.FloatField()
    info_bits = serializers.FloatField()
    generalized_entropy = serializers.FloatField()
