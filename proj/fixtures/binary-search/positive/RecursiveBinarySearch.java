public class RecursiveBinarySearch {
    static int find(int[] data, int target, int low, int high) {
        if (low > high) {
            return -1;
        }
        int mid = (low + high) / 2;
        if (data[mid] == target) {
            return mid;
        }
        if (data[mid] < target) {
            return find(data, target, mid + 1, high);
        }
        return find(data, target, low, mid - 1);
    }
}
