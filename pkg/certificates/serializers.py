from rest_framework import serializers

from graphs.serializers import EdgeField
from utils.base.constants import MAX_CLASSES
from utils.base.exceptions import PatternError

from .models import RootedCertificate, TargetPattern


class TargetPatternSerializer(serializers.Serializer):
    """Pattern document ``{"k": int, "edges": [[s, t], ...]}`` over class indices"""
    k = serializers.IntegerField(min_value=0, max_value=MAX_CLASSES)
    edges = serializers.ListField(child=EdgeField(), allow_empty=True)

    def validate(self, attrs):
        try:
            attrs['pattern'] = TargetPattern.build(attrs['k'], attrs['edges'])
        except PatternError as exc:
            raise serializers.ValidationError({'edges': [str(exc)]})
        return attrs

    def create(self, validated_data):
        return validated_data['pattern']


class CertificateSerializer(serializers.Serializer):
    """Certificate document ``{"bags": {"t": [v, ...], ...}}``"""
    bags = serializers.DictField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)))

    def validate_bags(self, value):
        bags = {}
        for key, members in value.items():
            try:
                root = int(key)
            except (TypeError, ValueError):
                raise serializers.ValidationError(
                    {key: ['bag keys must be transversal vertex indices']})
            if len(set(members)) != len(members):
                raise serializers.ValidationError({key: ['bag repeats a vertex']})
            bags[root] = frozenset(members)
        return bags

    def create(self, validated_data):
        return RootedCertificate(validated_data['bags'])

    def to_representation(self, instance):
        if isinstance(instance, RootedCertificate):
            return instance.to_dict()
        return super().to_representation(instance)


class ViolationSerializer(serializers.Serializer):
    kind = serializers.CharField()
    detail = serializers.CharField()
    witness = serializers.JSONField()


class VerifyReportSerializer(serializers.Serializer):
    ok = serializers.BooleanField()
    violations = ViolationSerializer(many=True)


class SearchStatsSerializer(serializers.Serializer):
    nodes = serializers.IntegerField(min_value=0)
    max_depth = serializers.IntegerField(min_value=0)
    elapsed = serializers.FloatField(min_value=0)
    pruned = serializers.DictField(child=serializers.IntegerField(min_value=0))


class SolveVerdictSerializer(serializers.Serializer):
    status = serializers.ChoiceField(choices=['SAT', 'UNSAT', 'BUDGET_EXCEEDED'])
    certificate = CertificateSerializer(allow_null=True)
    stats = SearchStatsSerializer()
    unsat_kind = serializers.ChoiceField(
        choices=['EXHAUSTIVE', 'COUNTING'], allow_null=True)
