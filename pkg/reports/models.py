from django.db import models, transaction
import json


class ReportRun(models.Model):
    seed = models.BigIntegerField()
    sections = models.TextField(
        help_text='JSON array of the sections that were run (empty for all)',
        blank=True,
        default='[]'
    )
    passed = models.BooleanField(default=False)
    pass_count = models.PositiveIntegerField(default=0)
    fail_count = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at', '-id']

    def __str__(self):
        return f"Report run {self.pk} (seed {self.seed}): {self.pass_count} passed, {self.fail_count} failed"

    def get_sections(self):
        """Return sections as a Python list"""
        try:
            return json.loads(self.sections or '[]')
        except json.JSONDecodeError:
            return []

    @classmethod
    def record(cls, result, sections=None):
        """Persist a ReportResult and its entries"""
        summary = result.summary
        with transaction.atomic():
            run = cls.objects.create(
                seed=result.seed,
                sections=json.dumps(sorted(sections or [])),
                passed=result.passed,
                pass_count=summary['pass'],
                fail_count=summary['fail'],
            )
            ReportEntryRecord.objects.bulk_create([
                ReportEntryRecord(
                    run=run,
                    check_id=entry.id,
                    section=entry.section,
                    description=entry.description,
                    paper_value=entry.paper_value,
                    computed=entry.computed,
                    tolerance=entry.tolerance,
                    status=entry.status,
                    note=entry.note,
                )
                for entry in result.entries
            ])
        return run


class ReportEntryRecord(models.Model):
    STATUS_CHOICES = [
        ('pass', 'Pass'),
        ('fail', 'Fail'),
    ]

    run = models.ForeignKey(ReportRun, on_delete=models.CASCADE, related_name='entries')
    check_id = models.CharField(max_length=100)
    section = models.CharField(max_length=20)
    description = models.CharField(max_length=200)
    paper_value = models.FloatField()
    computed = models.FloatField(null=True, blank=True)
    tolerance = models.FloatField()
    status = models.CharField(max_length=4, choices=STATUS_CHOICES)
    note = models.TextField(blank=True, default='')

    class Meta:
        ordering = ['run', 'check_id']

    def __str__(self):
        return f"{self.check_id}: {self.status}"
