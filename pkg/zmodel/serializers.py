from rest_framework import serializers

from certificates.serializers import CertificateSerializer
from graphs.serializers import GraphSerializer
from kempe.serializers import InstanceSerializer


class ZInstanceSerializer(serializers.Serializer):
    base = GraphSerializer()
    instance = InstanceSerializer(source='inst')
    encoding = serializers.SerializerMethodField()

    def get_encoding(self, obj):
        return '(x, i) -> 2x + (i - 1)'


class GoodPermutationSerializer(serializers.Serializer):
    f = serializers.ListField(child=serializers.IntegerField(min_value=0))


class GoodPermutationReportSerializer(serializers.Serializer):
    found = serializers.BooleanField()
    permutation = serializers.ListField(
        child=serializers.IntegerField(min_value=0), allow_null=True)
    certificate = CertificateSerializer(allow_null=True)


class AnticliqueBoundSerializer(serializers.Serializer):
    members = serializers.ListField(child=serializers.IntegerField(min_value=0))
    neighborhood = serializers.ListField(child=serializers.IntegerField(min_value=0))
    size_one = serializers.IntegerField(min_value=0)
    size_two = serializers.IntegerField(min_value=0)
    size_three = serializers.IntegerField(min_value=0)
    bound = serializers.IntegerField(min_value=0)
    expanding = serializers.BooleanField()


class CountingReportSerializer(serializers.Serializer):
    applicable = serializers.BooleanField()
    good_perm_exists = serializers.BooleanField()
    good_permutation = GoodPermutationSerializer(allow_null=True)
    violating_anticlique = serializers.ListField(
        child=serializers.IntegerField(min_value=0), allow_null=True)
    verdict = serializers.ChoiceField(choices=['UNSAT_CERTIFIED', 'INCONCLUSIVE'])
    vertex_count = serializers.IntegerField(min_value=0)
    min_bound = serializers.IntegerField(allow_null=True)
    bounds = AnticliqueBoundSerializer(many=True)
    regular_premises = serializers.BooleanField()
