public class ShiftMid {
    public int indexOf(long[] sorted, long value) {
        int left = 0;
        int right = sorted.length - 1;
        int probes = 0;
        while (left <= right) {
            probes++;
            int middle = (left + right) >>> 1;
            if (sorted[middle] == value) {
                return middle;
            }
            if (sorted[middle] < value) {
                left = middle + 1;
            } else {
                right = middle - 1;
            }
        }
        return -1;
    }
}
