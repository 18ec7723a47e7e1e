from rest_framework import serializers

from certificates.serializers import CertificateSerializer, TargetPatternSerializer
from graphs.serializers import EdgeField

from .models import RUNGS


class MatchingWitnessSerializer(serializers.Serializer):
    pattern = TargetPatternSerializer(read_only=True)
    anticlique = serializers.SerializerMethodField()
    matching = serializers.ListField(child=EdgeField())

    def get_anticlique(self, obj):
        return sorted(obj.anticlique)


class GoodMatchingSerializer(serializers.Serializer):
    edges = serializers.ListField(child=EdgeField())


class StrategyReportSerializer(serializers.Serializer):
    """Ladder outcome for one doubled graph, as printed by ``zsweep``"""
    rung = serializers.ChoiceField(choices=RUNGS)
    path = serializers.CharField(read_only=True)
    attempts = serializers.ListField(child=serializers.ChoiceField(choices=RUNGS))
    steps = serializers.ListField(child=serializers.CharField())
    certificate = CertificateSerializer()
